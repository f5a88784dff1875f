#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "teichkit/algebra/matrix2.hpp"
#include "teichkit/algebra/rational.hpp"

namespace teichkit {

/// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n);
bool is_perfect_square(std::int64_t n);

/// Exact real quadratic irrational (P + sqrt(D)) / Q.
///
/// D is a positive non-square and the triple is kept normalized so that Q
/// divides D - P^2, which is the invariant the continued-fraction recurrence
/// needs. Construction rescales (P, Q, D) -> (P|Q|, Q|Q|, D Q^2) when the
/// caller's triple does not already satisfy it.
class QuadraticIrrational {
 public:
  /// The same number written as rational + coefficient * sqrt(radicand) with a
  /// squarefree radicand. Two surds are equal iff their field forms are equal.
  struct FieldForm {
    std::int64_t radicand = 2;
    Rational rational;
    Rational coefficient;

    friend bool operator==(const FieldForm&, const FieldForm&) = default;
    friend auto operator<=>(const FieldForm& x, const FieldForm& y) {
      if (auto c = x.radicand <=> y.radicand; c != 0) return c;
      if (auto c = x.rational <=> y.rational; c != 0) return c;
      return x.coefficient <=> y.coefficient;
    }
  };

  QuadraticIrrational(std::int64_t p, std::int64_t q, std::int64_t d);

  /// Inverse of field_form(); throws InvalidArgument for a zero coefficient.
  static QuadraticIrrational from_field(const FieldForm& form);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t d() const { return d_; }

  double value() const;
  std::int64_t floor() const;
  FieldForm field_form() const;

  /// (a x + b) / (c x + d) for the integer matrix [[a, b], [c, d]]; throws
  /// SingularMatrix when det = 0.
  QuadraticIrrational moebius(const IntMatrix2& m) const;

  std::string to_string() const;

  friend bool operator==(const QuadraticIrrational& x, const QuadraticIrrational& y) {
    return x.field_form() == y.field_form();
  }

 private:
  std::int64_t p_;
  std::int64_t q_;
  std::int64_t d_;
};

}  // namespace teichkit
