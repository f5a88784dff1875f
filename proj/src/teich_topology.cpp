#include "teichkit/teich_topology.hpp"

#include <algorithm>
#include <cmath>

namespace teichkit::teich {

namespace {

bool contracting_modulus(Complex z, Tolerance tol) {
  const double m = std::abs(z);
  return m > tol.eps() && m < 1.0 - tol.eps();
}

// Curve stratum label: 1 for C, p for C_p, 0 for the base.
int stratum_order(const TeichPoint& x) {
  if (std::holds_alternative<CurveC>(x)) return 1;
  if (const auto* cp = std::get_if<CurveCp>(&x)) return cp->p;
  return 0;
}

// Curve point whose image coincides with the base point (d, t), if any.
std::optional<TeichPoint> curve_over(const Base& b, Tolerance tol) {
  const Complex half_trace = b.t / 2.0;
  if (std::abs(b.d - half_trace * half_trace) <= tol.eps()) return CurveC{half_trace};

  const auto [big, small] = quadratic_roots(b.d, b.t, tol);
  const double mb = std::abs(big);
  const double ms = std::abs(small);
  if (std::abs(mb - ms) <= tol.eps()) return std::nullopt;
  const double estimate = std::log(ms) / std::log(mb);
  if (!(estimate < hopf::kMaxResonanceOrder + 0.5)) return std::nullopt;
  const int p = static_cast<int>(std::lround(estimate));
  if (p < 2) return std::nullopt;
  const TeichPoint candidate = CurveCp{p, big};
  if (image_distance(candidate, b) <= tol.eps()) return candidate;
  return std::nullopt;
}

}  // namespace

bool is_in_D(Complex d, Complex t, Tolerance tol) {
  if (!std::isfinite(std::abs(d)) || !std::isfinite(std::abs(t))) return false;
  const auto [r1, r2] = quadratic_roots(d, t, tol);
  return contracting_modulus(r1, tol) && contracting_modulus(r2, tol);
}

void validate(const TeichPoint& x, Tolerance tol) {
  if (const auto* b = std::get_if<Base>(&x)) {
    if (!is_in_D(b->d, b->t, tol)) throw Error(ErrorCode::InvalidPoint, "base point lies outside D");
  } else if (const auto* c = std::get_if<CurveC>(&x)) {
    if (!std::isfinite(std::abs(c->lambda)) || !contracting_modulus(c->lambda, tol)) {
      throw Error(ErrorCode::InvalidPoint, "curve point needs 0 < |lambda| < 1");
    }
  } else {
    const auto& cp = std::get<CurveCp>(x);
    if (cp.p < 2) throw Error(ErrorCode::InvalidPoint, "C_p stratum needs p >= 2");
    if (!std::isfinite(std::abs(cp.lambda)) || !contracting_modulus(cp.lambda, tol)) {
      throw Error(ErrorCode::InvalidPoint, "curve point needs 0 < |lambda| < 1");
    }
  }
}

TeichPoint point_of_class(const hopf::HopfClass& c) {
  if (const auto* diag = std::get_if<hopf::Diagonal>(&c)) {
    return Base{diag->lambda1() * diag->lambda2(), diag->lambda1() + diag->lambda2()};
  }
  const auto& res = std::get<hopf::Resonant>(c);
  if (res.p() == 1) return CurveC{res.lambda()};
  return CurveCp{res.p(), res.lambda()};
}

hopf::HopfClass class_of_point(const TeichPoint& x, Tolerance tol) {
  validate(x, tol);
  if (const auto* b = std::get_if<Base>(&x)) {
    const auto [r1, r2] = quadratic_roots(b->d, b->t, tol);
    return hopf::Diagonal(r1, r2, tol);
  }
  if (const auto* c = std::get_if<CurveC>(&x)) return hopf::Resonant(c->lambda, 1, tol);
  const auto& cp = std::get<CurveCp>(x);
  return hopf::Resonant(cp.lambda, cp.p, tol);
}

TeichImage image(const TeichPoint& x) {
  if (const auto* b = std::get_if<Base>(&x)) return {b->d, b->t};
  if (const auto* c = std::get_if<CurveC>(&x)) return {c->lambda * c->lambda, 2.0 * c->lambda};
  const auto& cp = std::get<CurveCp>(x);
  const Complex lp = ipow(cp.lambda, cp.p);
  return {lp * cp.lambda, cp.lambda + lp};
}

double image_distance(const TeichPoint& x, const TeichPoint& y) {
  const TeichImage a = image(x);
  const TeichImage b = image(y);
  return std::max(std::abs(a.d - b.d), std::abs(a.t - b.t));
}

bool approx_equal(const TeichPoint& x, const TeichPoint& y, Tolerance tol) {
  if (x.index() != y.index()) return false;
  if (const auto* bx = std::get_if<Base>(&x)) {
    const auto& by = std::get<Base>(y);
    return teichkit::approx_equal(bx->d, by.d, tol) && teichkit::approx_equal(bx->t, by.t, tol);
  }
  if (const auto* cx = std::get_if<CurveC>(&x)) {
    return teichkit::approx_equal(cx->lambda, std::get<CurveC>(y).lambda, tol);
  }
  const auto& px = std::get<CurveCp>(x);
  const auto& py = std::get<CurveCp>(y);
  return px.p == py.p && teichkit::approx_equal(px.lambda, py.lambda, tol);
}

std::optional<TeichPoint> twin(const TeichPoint& x, Tolerance tol) {
  if (const auto* b = std::get_if<Base>(&x)) return curve_over(*b, tol);
  const TeichImage im = image(x);
  return Base{im.d, im.t};
}

bool separated(const TeichPoint& x, const TeichPoint& y, Tolerance tol) {
  if (approx_equal(x, y, tol)) throw Error(ErrorCode::SamePoint, "separation of a point from itself");
  return image_distance(x, y) > tol.eps();
}

bool adheres(const TeichPoint& x, const TeichPoint& y, Tolerance tol) {
  if (approx_equal(x, y, tol)) return true;
  return std::holds_alternative<Base>(x) && !std::holds_alternative<Base>(y) &&
         image_distance(x, y) <= tol.eps();
}

bool neighborhood_contains(const TeichPoint& center, double radius, const TeichPoint& x, Tolerance tol) {
  if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "neighborhood radius must be positive");
  const double dist = image_distance(center, x);
  if (!(dist < radius || dist <= tol.eps())) return false;
  const int order = stratum_order(center);
  if (order == 0) return true;
  // A curve neighborhood omits the base points lying on its own curve.
  if (const auto* b = std::get_if<Base>(&x)) {
    const auto over = curve_over(*b, tol);
    if (over && stratum_order(*over) == order) return false;
  }
  return true;
}

}  // namespace teichkit::teich
