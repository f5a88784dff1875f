#pragma once

#include <optional>
#include <utility>
#include <variant>

#include "teichkit/algebra/complex.hpp"
#include "teichkit/algebra/matrix2.hpp"

namespace teichkit::hopf {

/// Resonance orders are searched up to this bound; beyond it |lambda|^p is
/// indistinguishable from the eigenvalue gap at the default tolerance.
inline constexpr int kMaxResonanceOrder = 64;

/// A linear contraction z -> A z of C^2.
struct LinearContraction {
  Matrix2C matrix;
};

/// (z, w) -> (lambda z + c w^p, lambda^p w). With c = 1 this is the resonant
/// normal form; p = 1 is the Jordan block.
struct ResonantForm {
  Complex lambda;
  int p = 1;
  Complex c{1.0, 0.0};
};

using ContractionInput = std::variant<LinearContraction, ResonantForm>;

/// Surface of the diagonal contraction diag(lambda1, lambda2), with the
/// eigenvalues kept in canonical order (|lambda1| >= |lambda2|).
class Diagonal {
 public:
  /// Orders the pair canonically; throws NotContracting unless both moduli
  /// lie in (eps, 1 - eps).
  Diagonal(Complex lambda1, Complex lambda2, Tolerance tol = {});

  Complex lambda1() const { return lambda1_; }
  Complex lambda2() const { return lambda2_; }

 private:
  Complex lambda1_;
  Complex lambda2_;
};

/// Surface of the resonant normal form g_{lambda,p}; p = 1 is the linear
/// non-diagonalizable class.
class Resonant {
 public:
  Resonant(Complex lambda, int p, Tolerance tol = {});

  Complex lambda() const { return lambda_; }
  int p() const { return p_; }

 private:
  Complex lambda_;
  int p_;
};

/// Biholomorphism class of a Hopf surface. Distinct values are
/// non-biholomorphic surfaces.
using HopfClass = std::variant<Diagonal, Resonant>;

bool approx_equal(const HopfClass& x, const HopfClass& y, Tolerance tol = {});

/// Both eigenvalue moduli in (eps, 1 - eps).
bool is_contracting(const Matrix2C& a, Tolerance tol = {});

/// The unique p >= 1 with big^p == small (within eps), if any. Requires
/// 0 < |small| <= |big| < 1; throws InvalidArgument otherwise.
std::optional<int> resonance_order(Complex big, Complex small, Tolerance tol = {});

/// Differential at the origin of the contraction.
Matrix2C linear_part(const ContractionInput& input);

/// Throws NotContracting if the input is not a contraction.
HopfClass classify(const ContractionInput& input, Tolerance tol = {});

/// (det A, Tr A).
std::pair<Complex, Complex> det_trace(const Matrix2C& a);

bool biholomorphic(const ContractionInput& x, const ContractionInput& y, Tolerance tol = {});

}  // namespace teichkit::hopf
