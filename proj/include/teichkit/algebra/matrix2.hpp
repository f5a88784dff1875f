#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "teichkit/algebra/complex.hpp"

namespace teichkit {

/// 2x2 complex matrix [[a, b], [c, d]].
class Matrix2C {
 public:
  Matrix2C() = default;
  Matrix2C(Complex a, Complex b, Complex c, Complex d)
      : a_(checked(a)), b_(checked(b)), c_(checked(c)), d_(checked(d)) {}

  static Matrix2C identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Matrix2C diagonal(Complex x, Complex y) { return {x, 0.0, 0.0, y}; }
  static Matrix2C scalar(Complex x) { return diagonal(x, x); }

  Complex a() const { return a_; }
  Complex b() const { return b_; }
  Complex c() const { return c_; }
  Complex d() const { return d_; }

  Complex det() const { return a_ * d_ - b_ * c_; }
  Complex trace() const { return a_ + d_; }

  bool invertible(Tolerance tol = {}) const { return std::abs(det()) > tol.eps(); }

  /// Throws SingularMatrix when |det| <= eps.
  Matrix2C inverse(Tolerance tol = {}) const;

  /// Largest entrywise modulus.
  double max_norm() const;

  friend Matrix2C operator*(const Matrix2C& x, const Matrix2C& y);
  friend Matrix2C operator*(Complex s, const Matrix2C& m);
  friend Matrix2C operator+(const Matrix2C& x, const Matrix2C& y);
  friend Matrix2C operator-(const Matrix2C& x, const Matrix2C& y);

 private:
  Complex a_{}, b_{}, c_{}, d_{};
};

bool approx_equal(const Matrix2C& x, const Matrix2C& y, Tolerance tol = {});

/// Eigenvalues in canonical order and whether the matrix is diagonalizable.
struct Eigen2 {
  Complex first;
  Complex second;
  bool diagonalizable;
};

/// Distinct eigenvalues (beyond eps) are diagonalizable; a repeated eigenvalue
/// is diagonalizable only when the matrix is within eps of the scalar matrix.
Eigen2 eigen2(const Matrix2C& m, Tolerance tol = {});

/// Exact 2x2 integer matrix [[a, b], [c, d]].
struct IntMatrix2 {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static constexpr IntMatrix2 identity() { return {1, 0, 0, 1}; }
  /// Inversion tau -> -1/tau.
  static constexpr IntMatrix2 S() { return {0, -1, 1, 0}; }
  /// Translation tau -> tau + n.
  static constexpr IntMatrix2 T(std::int64_t n = 1) { return {1, n, 0, 1}; }

  std::int64_t det() const;
  std::int64_t trace() const;

  bool is_sl2() const { return det() == 1; }
  bool is_gl2() const { const auto dt = det(); return dt == 1 || dt == -1; }

  /// Exact inverse over the integers; throws SingularMatrix unless det = +-1.
  IntMatrix2 inverse() const;

  std::string to_string() const;

  friend IntMatrix2 operator*(const IntMatrix2& x, const IntMatrix2& y);
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
};

IntMatrix2 operator-(const IntMatrix2& m);

}  // namespace teichkit
