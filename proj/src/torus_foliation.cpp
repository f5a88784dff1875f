#include "teichkit/torus_foliation.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <utility>

#include "teichkit/algebra/checked_int.hpp"

namespace teichkit::foliation {

namespace {

struct SurdOrbit {
  std::vector<std::int64_t> quotients;
  std::vector<QuadraticIrrational> states;
  std::size_t cycle_start = 0;
};

// x_{k+1} = 1 / (x_k - a_k) on the normalized (P, Q) state with D fixed:
//   a = floor((P + sqrt D) / Q), P' = a Q - P, Q' = (D - P'^2) / Q.
// For fixed D distinct states are distinct numbers, so the first repeated
// state closes the minimal period. Lagrange's theorem guarantees it repeats.
SurdOrbit surd_orbit(const QuadraticIrrational& x) {
  using detail::mul;
  using detail::sub;
  SurdOrbit orbit;
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
  std::int64_t p = x.p();
  std::int64_t q = x.q();
  const std::int64_t d = x.d();
  for (;;) {
    const auto [it, inserted] = seen.emplace(std::pair{p, q}, orbit.states.size());
    if (!inserted) {
      orbit.cycle_start = it->second;
      return orbit;
    }
    const QuadraticIrrational current(p, q, d);
    const std::int64_t a = current.floor();
    orbit.quotients.push_back(a);
    orbit.states.push_back(current);
    const std::int64_t next_p = sub(mul(a, q), p);
    q = sub(d, mul(next_p, next_p)) / q;
    p = next_p;
  }
}

ContinuedFraction euclid(const Rational& r) {
  ContinuedFraction cf;
  std::int64_t n = r.num();
  std::int64_t m = r.den();
  while (m != 0) {
    const std::int64_t a = detail::floor_div(n, m);
    cf.preperiod.push_back(a);
    const std::int64_t rem = detail::sub(n, detail::mul(a, m));
    n = m;
    m = rem;
  }
  return cf;
}

}  // namespace

double slope_value(const Slope& alpha) {
  if (const auto* r = std::get_if<Rational>(&alpha)) return r->to_double();
  return std::get<QuadraticIrrational>(alpha).value();
}

std::string slope_to_string(const Slope& alpha) {
  if (const auto* r = std::get_if<Rational>(&alpha)) return r->to_string();
  return std::get<QuadraticIrrational>(alpha).to_string();
}

LeafDescriptor leaf_descriptor(const Slope& alpha) {
  if (const auto* r = std::get_if<Rational>(&alpha)) return ClosedLeaf{r->num(), r->den()};
  return DenseLine{};
}

LeafSpace leaf_space(const Slope& alpha) {
  if (const auto* r = std::get_if<Rational>(&alpha)) return Circle{r->den()};
  return NonHausdorffQuotient{};
}

std::vector<Complex> rotation_orbit(Complex z0, const Slope& alpha, std::size_t max_points, Tolerance tol) {
  checked(z0);
  if (std::abs(std::abs(z0) - 1.0) > tol.eps()) {
    throw Error(ErrorCode::NotOnCircle, "orbit start point must lie on the unit circle");
  }
  const auto turn = [z0](double fraction) {
    return z0 * std::polar(1.0, 2.0 * std::numbers::pi * fraction);
  };
  std::vector<Complex> points;
  if (const auto* r = std::get_if<Rational>(&alpha)) {
    // Exact angle bookkeeping: the k-th iterate turns by (k p mod q) / q.
    const auto q = static_cast<std::size_t>(r->den());
    const std::int64_t step = r->num() - detail::floor_div(r->num(), r->den()) * r->den();
    std::int64_t numerator = 0;
    for (std::size_t k = 0; k < q && k < max_points; ++k) {
      points.push_back(turn(static_cast<double>(numerator) / static_cast<double>(r->den())));
      numerator = (numerator + step) % r->den();
    }
    return points;
  }
  const double a = slope_value(alpha);
  for (std::size_t k = 0; k < max_points; ++k) {
    const double angle = static_cast<double>(k) * a;
    points.push_back(turn(angle - std::floor(angle)));
  }
  return points;
}

ContinuedFraction cf_expand(const Slope& alpha) {
  if (const auto* r = std::get_if<Rational>(&alpha)) return euclid(*r);
  const SurdOrbit orbit = surd_orbit(std::get<QuadraticIrrational>(alpha));
  const auto split = orbit.quotients.begin() + static_cast<std::ptrdiff_t>(orbit.cycle_start);
  return {{orbit.quotients.begin(), split}, {split, orbit.quotients.end()}};
}

double cf_evaluate(const ContinuedFraction& cf, std::size_t terms) {
  std::vector<std::int64_t> seq;
  for (std::size_t k = 0; k < terms; ++k) {
    if (k < cf.preperiod.size()) {
      seq.push_back(cf.preperiod[k]);
    } else if (!cf.period.empty()) {
      seq.push_back(cf.period[(k - cf.preperiod.size()) % cf.period.size()]);
    } else {
      break;
    }
  }
  if (seq.empty()) return 0.0;
  double value = static_cast<double>(seq.back());
  for (auto it = seq.rbegin() + 1; it != seq.rend(); ++it) value = static_cast<double>(*it) + 1.0 / value;
  return value;
}

std::vector<QuadraticIrrational> complete_quotients(const QuadraticIrrational& x) {
  return surd_orbit(x).states;
}

bool morita_equivalent(const Slope& alpha, const Slope& beta) {
  const auto* qa = std::get_if<QuadraticIrrational>(&alpha);
  const auto* qb = std::get_if<QuadraticIrrational>(&beta);
  if (!qa && !qb) return true;
  if (!qa || !qb) return false;
  if (qa->field_form().radicand != qb->field_form().radicand) return false;

  // Tails coincide iff the periodic cycles of complete quotients share a value.
  const SurdOrbit oa = surd_orbit(*qa);
  const SurdOrbit ob = surd_orbit(*qb);
  std::set<QuadraticIrrational::FieldForm> cycle;
  for (std::size_t k = oa.cycle_start; k < oa.states.size(); ++k) cycle.insert(oa.states[k].field_form());
  for (std::size_t k = ob.cycle_start; k < ob.states.size(); ++k) {
    if (cycle.contains(ob.states[k].field_form())) return true;
  }
  return false;
}

}  // namespace teichkit::foliation
