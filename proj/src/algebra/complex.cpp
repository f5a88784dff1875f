#include "teichkit/algebra/complex.hpp"

#include <cmath>
#include <numbers>

namespace teichkit {

Complex checked(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw Error(ErrorCode::NonFinite, "complex value is not finite");
  }
  return z;
}

bool approx_equal(Complex a, Complex b, Tolerance tol) {
  return std::abs(a - b) <= tol.eps();
}

double positive_arg(Complex z) {
  double a = std::arg(z);
  if (a < 0.0) a += 2.0 * std::numbers::pi;
  if (a >= 2.0 * std::numbers::pi) a = 0.0;
  return a;
}

bool canonical_before(Complex a, Complex b, Tolerance tol) {
  const double ma = std::abs(a);
  const double mb = std::abs(b);
  if (std::abs(ma - mb) > tol.eps()) return ma > mb;
  return positive_arg(a) < positive_arg(b);
}

std::pair<Complex, Complex> quadratic_roots(Complex d, Complex t, Tolerance tol) {
  return detail::roots_with_discriminant(d, t, t * t - 4.0 * d, tol);
}

std::pair<Complex, Complex> detail::roots_with_discriminant(Complex d, Complex t, Complex disc, Tolerance tol) {
  // Larger-magnitude root from the sign-aligned square root, the other from
  // Vieta (r1 * r2 = d) to avoid cancellation.
  Complex s = std::sqrt(disc);
  if ((std::conj(t) * s).real() < 0.0) s = -s;
  const Complex r1 = (t + s) / 2.0;
  const Complex r2 = (r1 != Complex{}) ? d / r1 : (t - s) / 2.0;
  if (canonical_before(r2, r1, tol)) return {r2, r1};
  return {r1, r2};
}

Complex ipow(Complex z, long n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex result{1.0, 0.0};
  Complex base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

}  // namespace teichkit
