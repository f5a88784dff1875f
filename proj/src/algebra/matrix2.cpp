#include "teichkit/algebra/matrix2.hpp"

#include <algorithm>
#include <cmath>

#include "teichkit/algebra/checked_int.hpp"

namespace teichkit {

Matrix2C Matrix2C::inverse(Tolerance tol) const {
  if (!invertible(tol)) throw Error(ErrorCode::SingularMatrix, "matrix is not invertible");
  const Complex dt = det();
  return {d_ / dt, -b_ / dt, -c_ / dt, a_ / dt};
}

double Matrix2C::max_norm() const {
  return std::max({std::abs(a_), std::abs(b_), std::abs(c_), std::abs(d_)});
}

Matrix2C operator*(const Matrix2C& x, const Matrix2C& y) {
  return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
          x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_};
}

Matrix2C operator*(Complex s, const Matrix2C& m) {
  return {s * m.a_, s * m.b_, s * m.c_, s * m.d_};
}

Matrix2C operator+(const Matrix2C& x, const Matrix2C& y) {
  return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_, x.d_ + y.d_};
}

Matrix2C operator-(const Matrix2C& x, const Matrix2C& y) {
  return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_, x.d_ - y.d_};
}

bool approx_equal(const Matrix2C& x, const Matrix2C& y, Tolerance tol) {
  return (x - y).max_norm() <= tol.eps();
}

Eigen2 eigen2(const Matrix2C& m, Tolerance tol) {
  // (a - d)^2 + 4bc equals tr^2 - 4 det but stays exact for triangular input,
  // where the textbook form loses half the digits near a double root.
  const Complex diff = m.a() - m.d();
  const auto [first, second] = detail::roots_with_discriminant(m.det(), m.trace(), diff * diff + 4.0 * m.b() * m.c(), tol);
  if (std::abs(first - second) > tol.eps()) return {first, second, true};
  const bool scalar = (m - Matrix2C::scalar(first)).max_norm() <= tol.eps();
  return {first, second, scalar};
}

std::int64_t IntMatrix2::det() const {
  return detail::sub(detail::mul(a, d), detail::mul(b, c));
}

std::int64_t IntMatrix2::trace() const { return detail::add(a, d); }

IntMatrix2 IntMatrix2::inverse() const {
  const auto dt = det();
  if (dt != 1 && dt != -1) {
    throw Error(ErrorCode::SingularMatrix, "integer matrix is not invertible over Z");
  }
  // For det = +-1, 1/det = det.
  return {dt * d, -dt * b, -dt * c, dt * a};
}

std::string IntMatrix2::to_string() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
         std::to_string(d) + "]]";
}

IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y) {
  using detail::add;
  using detail::mul;
  return {add(mul(x.a, y.a), mul(x.b, y.c)), add(mul(x.a, y.b), mul(x.b, y.d)),
          add(mul(x.c, y.a), mul(x.d, y.c)), add(mul(x.c, y.b), mul(x.d, y.d))};
}

IntMatrix2 operator-(const IntMatrix2& m) {
  return {detail::neg(m.a), detail::neg(m.b), detail::neg(m.c), detail::neg(m.d)};
}

}  // namespace teichkit
