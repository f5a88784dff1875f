#pragma once

#include <optional>
#include <utility>

#include "teichkit/algebra/complex.hpp"
#include "teichkit/algebra/matrix2.hpp"

namespace teichkit::tori {

/// A point tau of the upper half-plane, parametrizing the torus C / (Z + Z tau).
class LatticeParameter {
 public:
  /// Throws InvalidArgument unless Im(tau) > 0.
  explicit LatticeParameter(Complex tau);

  Complex tau() const { return tau_; }

 private:
  Complex tau_;
};

/// tau -> (a tau + b) / (c tau + d). Throws NotUnimodular unless det = 1.
LatticeParameter moebius(const IntMatrix2& m, const LatticeParameter& tau);

struct Reduction {
  LatticeParameter reduced;
  IntMatrix2 witness;  // moebius(witness, input) == reduced
};

/// Moves tau into the standard fundamental domain |Re| <= 1/2, |tau| >= 1 of
/// SL2(Z), with the boundary glued so that the Re = -1/2 edge and the left half
/// of the unit arc are the canonical representatives.
Reduction reduce_fundamental_domain(const LatticeParameter& tau, Tolerance tol = {});

/// Witness A in SL2(Z) with moebius(A, tau1) = tau2, or nullopt when the two
/// tori are not biholomorphic.
std::optional<IntMatrix2> tori_equivalent(const LatticeParameter& tau1, const LatticeParameter& tau2,
                                          Tolerance tol = {});

/// Lattice coordinates (x, y) in [0, 1)^2 with z = x + y tau modulo Z + Z tau.
std::pair<double, double> lattice_reduce(Complex z, const LatticeParameter& tau, Tolerance tol = {});

/// A translation of the torus E_tau, i.e. a morphism of the universal-family
/// groupoid lying over tau. Stored in lattice coordinates.
class TorusTranslation {
 public:
  TorusTranslation(const LatticeParameter& tau, Complex z, Tolerance tol = {});

  static TorusTranslation zero(const LatticeParameter& tau) { return {tau, Complex{}}; }
  /// From lattice coordinates, wrapped into [0, 1).
  static TorusTranslation from_coordinates(const LatticeParameter& tau, double x, double y, Tolerance tol = {});

  const LatticeParameter& tau() const { return tau_; }
  double x() const { return x_; }
  double y() const { return y_; }
  /// Canonical representative x + y tau.
  Complex z() const;

  TorusTranslation inverse(Tolerance tol = {}) const;

 private:
  LatticeParameter tau_;
  double x_ = 0.0;
  double y_ = 0.0;
};

/// Composition in the fiber over tau; throws MismatchedFiber when the two
/// translations live over different parameters.
TorusTranslation translation_compose(const TorusTranslation& t1, const TorusTranslation& t2,
                                     Tolerance tol = {});

/// Equality modulo the lattice, comparing coordinates on the circle R/Z.
bool approx_equal(const TorusTranslation& t1, const TorusTranslation& t2, Tolerance tol = {});

}  // namespace teichkit::tori
