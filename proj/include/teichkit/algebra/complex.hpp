#pragma once

#include <complex>
#include <utility>

#include "teichkit/algebra/tolerance.hpp"

namespace teichkit {

using Complex = std::complex<double>;

/// Returns `z` unchanged, or throws NonFinite if either part is NaN or infinite.
/// Every domain type runs its scalar fields through this on construction.
Complex checked(Complex z);

bool approx_equal(Complex a, Complex b, Tolerance tol = {});

/// Argument normalized to [0, 2*pi).
double positive_arg(Complex z);

/// Orders by descending modulus; moduli within `tol` fall back to ascending
/// positive_arg. Returns true if `a` sorts strictly before `b`.
bool canonical_before(Complex a, Complex b, Tolerance tol = {});

/// Both roots of x^2 - t*x + d = 0, canonically ordered. A double root is
/// returned twice.
std::pair<Complex, Complex> quadratic_roots(Complex d, Complex t, Tolerance tol = {});

namespace detail {
/// quadratic_roots with the discriminant t^2 - 4d supplied by the caller,
/// who may know a form of it with less cancellation.
std::pair<Complex, Complex> roots_with_discriminant(Complex d, Complex t, Complex disc, Tolerance tol);
}  // namespace detail

/// z^n by repeated squaring; n may be negative.
Complex ipow(Complex z, long n);

}  // namespace teichkit
