#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "teichkit/algebra/complex.hpp"
#include "teichkit/algebra/quadratic_irrational.hpp"
#include "teichkit/algebra/rational.hpp"

namespace teichkit::foliation {

/// Slope alpha of the linear foliation of the 2-torus. Irrational slopes are
/// restricted to quadratic irrationals so that every question below is exact.
using Slope = std::variant<Rational, QuadraticIrrational>;

double slope_value(const Slope& alpha);
std::string slope_to_string(const Slope& alpha);

/// Closed leaf winding `vertical` times in one direction and `horizontal`
/// times in the other (coprime, horizontal > 0).
struct ClosedLeaf {
  std::int64_t vertical;
  std::int64_t horizontal;
  friend bool operator==(const ClosedLeaf&, const ClosedLeaf&) = default;
};

/// Leaf diffeomorphic to R and dense in the torus.
struct DenseLine {
  friend bool operator==(const DenseLine&, const DenseLine&) = default;
};

using LeafDescriptor = std::variant<ClosedLeaf, DenseLine>;

/// Leaf space S^1 = T / Z_q.
struct Circle {
  std::int64_t deck_order;
  friend bool operator==(const Circle&, const Circle&) = default;
};

struct NonHausdorffQuotient {
  friend bool operator==(const NonHausdorffQuotient&, const NonHausdorffQuotient&) = default;
};

using LeafSpace = std::variant<Circle, NonHausdorffQuotient>;

struct ContinuedFraction {
  std::vector<std::int64_t> preperiod;
  std::vector<std::int64_t> period;  // empty for rationals
  friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;
};

LeafDescriptor leaf_descriptor(const Slope& alpha);
LeafSpace leaf_space(const Slope& alpha);

/// Iterates the rotation z -> exp(2 pi i alpha) z from z0. A rational slope
/// p/q yields its q orbit points (capped at max_points); a quadratic slope
/// yields max_points points. Throws NotOnCircle when |z0| != 1.
std::vector<Complex> rotation_orbit(Complex z0, const Slope& alpha, std::size_t max_points, Tolerance tol = {});

/// Regular continued fraction. Rationals use the Euclidean expansion (last
/// quotient >= 2 when there is more than one term); quadratic irrationals get
/// the minimal preperiod and period found by detecting the first repeated
/// complete quotient.
ContinuedFraction cf_expand(const Slope& alpha);

/// Numerical value of the first `terms` partial quotients.
double cf_evaluate(const ContinuedFraction& cf, std::size_t terms);

/// Complete quotients visited by the continued-fraction algorithm, in order;
/// the last entries form the periodic cycle.
std::vector<QuadraticIrrational> complete_quotients(const QuadraticIrrational& x);

/// Morita equivalence of the rotation groupoids G x T => T. All rational
/// slopes are equivalent to the trivial groupoid on S^1; two quadratic slopes
/// are equivalent iff they lie in one GL2(Z) orbit, decided exactly by a
/// common tail of their continued fractions.
bool morita_equivalent(const Slope& alpha, const Slope& beta);

}  // namespace teichkit::foliation
