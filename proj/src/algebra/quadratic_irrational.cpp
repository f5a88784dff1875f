#include "teichkit/algebra/quadratic_irrational.hpp"

#include <cmath>
#include <numeric>

#include "teichkit/algebra/checked_int.hpp"
#include "teichkit/error.hpp"

namespace teichkit {

using detail::add;
using detail::floor_div;
using detail::mul;
using detail::sub;

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of a negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_perfect_square(std::int64_t n) {
  if (n < 0) return false;
  const auto r = isqrt(n);
  return r * r == n;
}

namespace {

// Splits n = f^2 * r with r squarefree.
std::pair<std::int64_t, std::int64_t> square_part(std::int64_t n) {
  std::int64_t f = 1;
  std::int64_t r = n;
  for (std::int64_t k = 2; k * k <= r; ++k) {
    while (r % (k * k) == 0) {
      r /= k * k;
      f *= k;
    }
  }
  return {f, r};
}

}  // namespace

QuadraticIrrational::QuadraticIrrational(std::int64_t p, std::int64_t q, std::int64_t d)
    : p_(p), q_(q), d_(d) {
  if (q == 0) throw Error(ErrorCode::InvalidArgument, "quadratic irrational with Q = 0");
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "quadratic irrational needs D > 0");
  if (is_perfect_square(d)) {
    throw Error(ErrorCode::InvalidArgument, "D = " + std::to_string(d) + " is a perfect square");
  }
  if (sub(d_, mul(p_, p_)) % q_ != 0) {
    const std::int64_t aq = q_ < 0 ? -q_ : q_;
    p_ = mul(p_, aq);
    d_ = mul(d_, mul(q_, q_));
    q_ = mul(q_, aq);
  }
}

double QuadraticIrrational::value() const {
  return (static_cast<double>(p_) + std::sqrt(static_cast<double>(d_))) / static_cast<double>(q_);
}

std::int64_t QuadraticIrrational::floor() const {
  // P + sqrt(D) lies strictly between P + s and P + s + 1, s = isqrt(D).
  const std::int64_t s = isqrt(d_);
  if (q_ > 0) return floor_div(add(p_, s), q_);
  return floor_div(sub(sub(-p_, s), 1), -q_);
}

QuadraticIrrational::FieldForm QuadraticIrrational::field_form() const {
  const auto [f, r] = square_part(d_);
  return {r, Rational(p_, q_), Rational(f, q_)};
}

QuadraticIrrational QuadraticIrrational::from_field(const FieldForm& form) {
  if (form.coefficient == Rational(0)) {
    throw Error(ErrorCode::InvalidArgument, "field form with zero irrational part is rational");
  }
  const std::int64_t l = std::lcm(form.rational.den(), form.coefficient.den());
  const std::int64_t u = mul(form.rational.num(), l / form.rational.den());
  const std::int64_t v = mul(form.coefficient.num(), l / form.coefficient.den());
  const std::int64_t d = mul(mul(v, v), form.radicand);
  if (v > 0) return {u, l, d};
  return {-u, -l, d};
}

QuadraticIrrational QuadraticIrrational::moebius(const IntMatrix2& m) const {
  if (m.det() == 0) throw Error(ErrorCode::SingularMatrix, "Moebius map with det = 0");
  const FieldForm x = field_form();
  const Rational r(x.radicand);
  // numerator = a x + b, denominator = c x + d, both in Q(sqrt(r)).
  const Rational nu = Rational(m.a) * x.rational + Rational(m.b);
  const Rational nv = Rational(m.a) * x.coefficient;
  const Rational du = Rational(m.c) * x.rational + Rational(m.d);
  const Rational dv = Rational(m.c) * x.coefficient;
  // Multiply through by the conjugate of the denominator.
  const Rational norm = du * du - dv * dv * r;
  const Rational ru = (nu * du - nv * dv * r) / norm;
  const Rational rv = (nv * du - nu * dv) / norm;
  return from_field({x.radicand, ru, rv});
}

std::string QuadraticIrrational::to_string() const {
  return "(" + std::to_string(p_) + "+sqrt(" + std::to_string(d_) + "))/" + std::to_string(q_);
}

}  // namespace teichkit
