#include "teichkit/complex_tori.hpp"

#include <cmath>
#include <tuple>

namespace teichkit::tori {

namespace {

// Fractional part in [0, 1); values within eps of 1 wrap to 0.
double unit_fraction(double v, Tolerance tol) {
  double f = v - std::floor(v);
  if (f >= 1.0 - tol.eps()) f = 0.0;
  return f;
}

double circle_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 1.0 - d);
}

}  // namespace

LatticeParameter::LatticeParameter(Complex tau) : tau_(checked(tau)) {
  if (!(tau.imag() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "lattice parameter must lie in the upper half-plane");
  }
}

LatticeParameter moebius(const IntMatrix2& m, const LatticeParameter& tau) {
  if (!m.is_sl2()) {
    throw Error(ErrorCode::NotUnimodular, "matrix " + m.to_string() + " is not in SL2(Z)");
  }
  const Complex t = tau.tau();
  const auto a = static_cast<double>(m.a);
  const auto b = static_cast<double>(m.b);
  const auto c = static_cast<double>(m.c);
  const auto d = static_cast<double>(m.d);
  const Complex num = a * t + b;
  const Complex den = c * t + d;
  // Im of the image is Im(tau) / |c tau + d|^2; compute it that way so it
  // never loses its sign to cancellation.
  const Complex image = num / den;
  return LatticeParameter(Complex(image.real(), t.imag() / std::norm(den)));
}

Reduction reduce_fundamental_domain(const LatticeParameter& tau, Tolerance tol) {
  IntMatrix2 acc = IntMatrix2::identity();
  Complex t = tau.tau();
  const double eps = tol.eps();
  for (;;) {
    const auto n = static_cast<std::int64_t>(std::floor(t.real() + 0.5));
    if (n != 0) {
      acc = IntMatrix2::T(-n) * acc;
      t -= static_cast<double>(n);
    }
    if (std::abs(t) < 1.0 - eps) {
      // Im strictly increases here, which bounds the number of rounds.
      acc = IntMatrix2::S() * acc;
      t = -1.0 / t;
      continue;
    }
    break;
  }
  t = moebius(acc, tau).tau();
  if (t.real() > 0.5 - eps) {
    acc = IntMatrix2::T(-1) * acc;
    t = moebius(acc, tau).tau();
  }
  if (std::abs(std::abs(t) - 1.0) <= eps && t.real() > eps) {
    acc = IntMatrix2::S() * acc;
    t = moebius(acc, tau).tau();
  }
  return {LatticeParameter(t), acc};
}

std::optional<IntMatrix2> tori_equivalent(const LatticeParameter& tau1, const LatticeParameter& tau2,
                                          Tolerance tol) {
  const Reduction r1 = reduce_fundamental_domain(tau1, tol);
  const Reduction r2 = reduce_fundamental_domain(tau2, tol);
  if (!approx_equal(r1.reduced.tau(), r2.reduced.tau(), tol)) return std::nullopt;
  return r2.witness.inverse() * r1.witness;
}

std::pair<double, double> lattice_reduce(Complex z, const LatticeParameter& tau, Tolerance tol) {
  checked(z);
  const Complex t = tau.tau();
  const double y = z.imag() / t.imag();
  const double x = z.real() - y * t.real();
  return {unit_fraction(x, tol), unit_fraction(y, tol)};
}

TorusTranslation::TorusTranslation(const LatticeParameter& tau, Complex z, Tolerance tol) : tau_(tau) {
  std::tie(x_, y_) = lattice_reduce(z, tau, tol);
}

Complex TorusTranslation::z() const { return x_ + y_ * tau_.tau(); }

TorusTranslation TorusTranslation::from_coordinates(const LatticeParameter& tau, double x, double y,
                                                    Tolerance tol) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw Error(ErrorCode::NonFinite, "lattice coordinate is not finite");
  TorusTranslation out = zero(tau);
  out.x_ = unit_fraction(x, tol);
  out.y_ = unit_fraction(y, tol);
  return out;
}

TorusTranslation TorusTranslation::inverse(Tolerance tol) const { return from_coordinates(tau_, -x_, -y_, tol); }

TorusTranslation translation_compose(const TorusTranslation& t1, const TorusTranslation& t2, Tolerance tol) {
  if (!approx_equal(t1.tau().tau(), t2.tau().tau(), tol)) {
    throw Error(ErrorCode::MismatchedFiber, "translations lie over different lattice parameters");
  }
  // Sum in lattice coordinates, then wrap; independent of the shape of tau.
  return TorusTranslation::from_coordinates(t1.tau(), t1.x() + t2.x(), t1.y() + t2.y(), tol);
}

bool approx_equal(const TorusTranslation& t1, const TorusTranslation& t2, Tolerance tol) {
  return approx_equal(t1.tau().tau(), t2.tau().tau(), tol) && circle_distance(t1.x(), t2.x()) <= tol.eps() &&
         circle_distance(t1.y(), t2.y()) <= tol.eps();
}

}  // namespace teichkit::tori
