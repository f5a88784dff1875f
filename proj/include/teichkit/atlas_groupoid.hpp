#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "teichkit/algebra/complex.hpp"
#include "teichkit/algebra/matrix2.hpp"

namespace teichkit::atlas {

/// Element (A, t) of the group GL2(C) x C with the twisted product
/// (A, t) * (B, s) = (AB, t + s det A).
class GroupElement {
 public:
  /// Throws SingularMatrix when A is not invertible.
  GroupElement(const Matrix2C& a, Complex t, Tolerance tol = {});

  const Matrix2C& a() const { return a_; }
  Complex t() const { return t_; }

 private:
  struct Unchecked {};
  GroupElement(Unchecked, const Matrix2C& a, Complex t) : a_(a), t_(t) {}

  // Products and inverses of invertible elements are invertible; skip the
  // tolerance test so tiny determinants survive composition.
  friend GroupElement g_mul(const GroupElement& x, const GroupElement& y);
  friend GroupElement g_inverse(const GroupElement& x, Tolerance tol);

  Matrix2C a_;
  Complex t_;
};

/// Object (A, t) of the atlas, A a contracting matrix.
class AtlasPoint {
 public:
  /// Throws NotContracting when A is not a contraction.
  AtlasPoint(const Matrix2C& a, Complex t, Tolerance tol = {});

  const Matrix2C& a() const { return a_; }
  Complex t() const { return t_; }

 private:
  Matrix2C a_;
  Complex t_;
};

/// Caller-supplied right action m . g of the group on the objects and
/// injection of the objects into the group. Both must be pure functions for a
/// groupoid_check report to mean anything.
struct AtlasStructure {
  std::string name;
  std::function<AtlasPoint(const AtlasPoint&, const GroupElement&)> action;
  std::function<GroupElement(const AtlasPoint&)> injection;
};

GroupElement g_identity();
GroupElement g_mul(const GroupElement& x, const GroupElement& y);
GroupElement g_inverse(const GroupElement& x, Tolerance tol = {});
/// x^p for any integer p; negative powers go through g_inverse.
GroupElement g_pow(const GroupElement& x, std::int64_t p, Tolerance tol = {});

bool approx_equal(const GroupElement& x, const GroupElement& y, Tolerance tol = {});
bool approx_equal(const AtlasPoint& x, const AtlasPoint& y, Tolerance tol = {});

/// (p, g, m) -> (injection(m)^p * g, m).
std::pair<GroupElement, AtlasPoint> z_action(std::int64_t p, const GroupElement& g, const AtlasPoint& m,
                                             const AtlasStructure& structure, Tolerance tol = {});

inline const AtlasPoint& source(const GroupElement& /*g*/, const AtlasPoint& m) { return m; }
AtlasPoint target(const GroupElement& g, const AtlasPoint& m, const AtlasStructure& structure);

/// m . g = m, injection(m) = identity.
AtlasStructure trivial_structure();

/// m . (B, s) = (B^-1 A_m B, t_m det B), injection(m) = (A_m, 0). A genuine
/// right action, but the target moves under the Z-action whenever
/// t_m != 0, because det A_m has modulus < 1.
AtlasStructure conjugation_structure();

struct LawReport {
  std::string name;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;
};

struct CheckReport {
  std::vector<LawReport> laws;

  bool all_passed() const;
  const LawReport* find(const std::string& name) const;
};

/// Randomized check of the groupoid laws for a structure:
///   action_identity       m . e = m
///   action_compatibility  m . (g * h) = (m . g) . h
///   z_invariance          source and target are unchanged by z_action
///   closure               m . g is again an atlas point
/// Draws `samples` random (m, g, h, p) with a fixed-seed generator. Throws
/// InvalidArgument for samples == 0; law failures are report content.
CheckReport groupoid_check(const AtlasStructure& structure, std::size_t samples, std::uint64_t seed,
                           Tolerance tol = {});

/// Random draws used by groupoid_check, exposed for tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed);

  Complex complex_in_box(double half_width);
  GroupElement group_element();
  AtlasPoint atlas_point();
  std::int64_t power(std::int64_t bound);

 private:
  double uniform(double lo, double hi);

  std::mt19937_64 engine_;
};

}  // namespace teichkit::atlas
