#include "teichkit/hopf.hpp"

#include <cmath>
#include <string>

namespace teichkit::hopf {

namespace {

bool contracting_modulus(Complex z, Tolerance tol) {
  const double m = std::abs(z);
  return m > tol.eps() && m < 1.0 - tol.eps();
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

Diagonal::Diagonal(Complex lambda1, Complex lambda2, Tolerance tol)
    : lambda1_(checked(lambda1)), lambda2_(checked(lambda2)) {
  if (!contracting_modulus(lambda1_, tol) || !contracting_modulus(lambda2_, tol)) {
    throw Error(ErrorCode::NotContracting, "diagonal eigenvalues must have modulus in (0, 1)");
  }
  if (canonical_before(lambda2_, lambda1_, tol)) std::swap(lambda1_, lambda2_);
}

Resonant::Resonant(Complex lambda, int p, Tolerance tol) : lambda_(checked(lambda)), p_(p) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "resonance order must be >= 1");
  if (!contracting_modulus(lambda_, tol)) {
    throw Error(ErrorCode::NotContracting, "resonant eigenvalue must have modulus in (0, 1)");
  }
}

bool approx_equal(const HopfClass& x, const HopfClass& y, Tolerance tol) {
  if (x.index() != y.index()) return false;
  if (const auto* dx = std::get_if<Diagonal>(&x)) {
    const auto& dy = std::get<Diagonal>(y);
    // The canonical order can flip between eigenvalues of equal modulus whose
    // arguments straddle 0, so compare as multisets.
    const bool same = teichkit::approx_equal(dx->lambda1(), dy.lambda1(), tol) &&
                      teichkit::approx_equal(dx->lambda2(), dy.lambda2(), tol);
    const bool swapped = teichkit::approx_equal(dx->lambda1(), dy.lambda2(), tol) &&
                         teichkit::approx_equal(dx->lambda2(), dy.lambda1(), tol);
    return same || swapped;
  }
  const auto& rx = std::get<Resonant>(x);
  const auto& ry = std::get<Resonant>(y);
  return rx.p() == ry.p() && teichkit::approx_equal(rx.lambda(), ry.lambda(), tol);
}

bool is_contracting(const Matrix2C& a, Tolerance tol) {
  const Eigen2 e = eigen2(a, tol);
  return contracting_modulus(e.first, tol) && contracting_modulus(e.second, tol);
}

std::optional<int> resonance_order(Complex big, Complex small, Tolerance tol) {
  const double mb = std::abs(big);
  const double ms = std::abs(small);
  if (!(ms > 0.0) || !(mb < 1.0) || ms > mb + tol.eps()) {
    throw Error(ErrorCode::InvalidArgument, "resonance_order needs 0 < |small| <= |big| < 1");
  }
  int p = 1;
  if (std::abs(mb - ms) > tol.eps()) {
    // |big|^p is strictly decreasing in p, so at most one candidate can match.
    const double estimate = std::log(ms) / std::log(mb);
    if (!(estimate < kMaxResonanceOrder + 0.5)) return std::nullopt;
    p = static_cast<int>(std::lround(estimate));
    if (p < 1) return std::nullopt;
  }
  if (std::abs(ipow(big, p) - small) <= tol.eps()) return p;
  return std::nullopt;
}

Matrix2C linear_part(const ContractionInput& input) {
  return std::visit(overloaded{
                        [](const LinearContraction& l) { return l.matrix; },
                        [](const ResonantForm& r) {
                          if (r.p == 1) return Matrix2C(r.lambda, r.c, 0.0, r.lambda);
                          return Matrix2C::diagonal(r.lambda, ipow(r.lambda, r.p));
                        },
                    },
                    input);
}

HopfClass classify(const ContractionInput& input, Tolerance tol) {
  if (const auto* lin = std::get_if<LinearContraction>(&input)) {
    if (!is_contracting(lin->matrix, tol)) {
      throw Error(ErrorCode::NotContracting, "matrix is not a contraction");
    }
    const Eigen2 e = eigen2(lin->matrix, tol);
    if (e.diagonalizable) return Diagonal(e.first, e.second, tol);
    // A non-diagonalizable 2x2 matrix has a double eigenvalue: the p = 1 resonance.
    return Resonant((e.first + e.second) / 2.0, 1, tol);
  }
  const auto& form = std::get<ResonantForm>(input);
  checked(form.lambda);
  checked(form.c);
  if (form.p < 1) throw Error(ErrorCode::InvalidArgument, "resonance order must be >= 1");
  if (!contracting_modulus(form.lambda, tol)) {
    throw Error(ErrorCode::NotContracting, "|lambda| must lie in (0, 1)");
  }
  // Conjugating by diag(u, 1) scales c by u, so only c == 0 versus c != 0 matters.
  if (std::abs(form.c) <= tol.eps()) return Diagonal(form.lambda, ipow(form.lambda, form.p), tol);
  return Resonant(form.lambda, form.p, tol);
}

std::pair<Complex, Complex> det_trace(const Matrix2C& a) { return {a.det(), a.trace()}; }

bool biholomorphic(const ContractionInput& x, const ContractionInput& y, Tolerance tol) {
  return approx_equal(classify(x, tol), classify(y, tol), tol);
}

}  // namespace teichkit::hopf
