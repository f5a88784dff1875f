#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "teichkit/torus_foliation.hpp"

using namespace teichkit;
using namespace teichkit::foliation;

namespace {

using QI = QuadraticIrrational;

const QI kSqrt2(0, 1, 2);
const QI kGolden(1, 2, 5);

// Four rational and eight quadratic slopes.
std::vector<Slope> twelve_slopes() {
  return {Rational(1, 3), Rational(2, 5), Rational(2, 3), Rational(5, 1),
          kSqrt2,         QI(1, 1, 2),    QI(-1, 1, 2),   kGolden,
          QI(0, 1, 5),    QI(0, 1, 3),    QI(0, 3, 3),    QI(0, 1, 7)};
}

oracle::FieldValue field_of(const QI& x) { return oracle::field_value(x.p(), x.q(), x.d()); }

double min_pairwise_gap(const std::vector<Complex>& pts) {
  double gap = 10.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) gap = std::min(gap, std::abs(pts[i] - pts[j]));
  return gap;
}

}  // namespace

TEST_CASE("leaf_descriptor examples") {
  CHECK(leaf_descriptor(Rational(2, 3)) == LeafDescriptor{ClosedLeaf{2, 3}});
  CHECK(leaf_descriptor(Rational(4, 6)) == LeafDescriptor{ClosedLeaf{2, 3}});
  CHECK(leaf_descriptor(kSqrt2) == LeafDescriptor{DenseLine{}});
  CHECK(leaf_descriptor(Rational(-1, 2)) == LeafDescriptor{ClosedLeaf{-1, 2}});
}

TEST_CASE("leaf_space examples") {
  CHECK(leaf_space(Rational(2, 3)) == LeafSpace{Circle{3}});
  CHECK(leaf_space(Rational(5, 1)) == LeafSpace{Circle{1}});
  CHECK(leaf_space(kGolden) == LeafSpace{NonHausdorffQuotient{}});
}

TEST_CASE("closed leaves correspond to circle leaf spaces") {
  for (const Slope& s : twelve_slopes()) {
    const LeafDescriptor l = leaf_descriptor(s);
    const LeafSpace x = leaf_space(s);
    if (const auto* c = std::get_if<ClosedLeaf>(&l)) {
      REQUIRE(std::holds_alternative<Circle>(x));
      CHECK(std::get<Circle>(x).deck_order == c->horizontal);
    } else {
      CHECK(std::holds_alternative<NonHausdorffQuotient>(x));
    }
  }
}

TEST_CASE("rotation_orbit examples") {
  const auto third = rotation_orbit(1.0, Rational(2, 3), 10);
  REQUIRE(third.size() == 3);
  // Direct iteration by multiplication with exp(4 pi i / 3).
  const Complex step = std::polar(1.0, 4.0 * M_PI / 3.0);
  Complex z = 1.0;
  for (const Complex& w : third) {
    CHECK(std::abs(w - z) < 1e-12);
    z *= step;
  }
  const auto zero = rotation_orbit(1.0, Rational(0, 1), 10);
  REQUIRE(zero.size() == 1);
  CHECK(std::abs(zero[0] - 1.0) < 1e-12);

  const auto dense = rotation_orbit(1.0, kSqrt2, 100);
  CHECK(dense.size() == 100);
  CHECK(min_pairwise_gap(dense) > 1e-9);

  CHECK_THROWS_AS(rotation_orbit(0.5, kSqrt2, 10), Error);
}

TEST_CASE("rational orbits have exactly q points") {
  const Complex z0 = std::polar(1.0, 0.37);
  for (std::int64_t q = 1; q <= 50; ++q) {
    for (std::int64_t p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const auto orbit = rotation_orbit(z0, Rational(p, q), 1000);
      CHECK(orbit.size() == static_cast<std::size_t>(q));
      CHECK(min_pairwise_gap(orbit) > 1e-9);
      for (const Complex& w : orbit) CHECK(std::abs(std::abs(w) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("cf_expand examples") {
  CHECK(cf_expand(Rational(7, 3)) == ContinuedFraction{{2, 3}, {}});
  CHECK(cf_expand(kSqrt2) == ContinuedFraction{{1}, {2}});
  CHECK(cf_expand(kGolden) == ContinuedFraction{{}, {1}});
  CHECK(cf_expand(Rational(-7, 3)) == ContinuedFraction{{-3, 1, 2}, {}});
  CHECK(cf_expand(Rational(4, 1)) == ContinuedFraction{{4}, {}});
  CHECK(cf_expand(Rational(1, 2)) == ContinuedFraction{{0, 2}, {}});
  CHECK(cf_expand(QI(0, 1, 7)) == ContinuedFraction{{2}, {1, 1, 1, 4}});
}

TEST_CASE("continued fractions have canonical shape and reproduce the value") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<std::int64_t> small(-10, 10);
  std::uniform_int_distribution<std::int64_t> qd(1, 10);
  std::uniform_int_distribution<std::int64_t> dd(2, 50);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t d = dd(rng);
    if (is_perfect_square(d)) continue;
    const QI x(small(rng), qd(rng) * (i % 2 == 0 ? 1 : -1), d);
    const ContinuedFraction cf = cf_expand(x);
    CHECK_FALSE(cf.period.empty());
    for (std::size_t k = 1; k < cf.preperiod.size(); ++k) CHECK(cf.preperiod[k] >= 1);
    for (auto a : cf.period) CHECK(a >= 1);
    CHECK(std::abs(cf_evaluate(cf, 40) - x.value()) < 1e-9);
  }
  for (int i = 0; i < 500; ++i) {
    const Rational r(small(rng) * 7 + 3, qd(rng) * 3 + 1);
    const ContinuedFraction cf = cf_expand(r);
    CHECK(cf.period.empty());
    if (cf.preperiod.size() > 1) CHECK(cf.preperiod.back() >= 2);
    CHECK(std::abs(cf_evaluate(cf, 40) - r.to_double()) < 1e-12);
  }
}

TEST_CASE("cf_expand agrees with exact field arithmetic") {
  std::mt19937_64 rng(72);
  std::uniform_int_distribution<std::int64_t> pp(-10, 10);
  std::uniform_int_distribution<std::int64_t> qq(1, 10);
  std::uniform_int_distribution<std::int64_t> dd(2, 50);
  for (int i = 0; i < 300; ++i) {
    const std::int64_t d = dd(rng);
    if (is_perfect_square(d)) continue;
    const std::int64_t q = qq(rng) * (i % 3 == 0 ? -1 : 1);
    const QI x(pp(rng), q, d);
    const auto [pre, period] = oracle::field_continued_fraction(field_of(x));
    const ContinuedFraction cf = cf_expand(x);
    CHECK(cf.preperiod == pre);
    CHECK(cf.period == period);
  }
}

TEST_CASE("morita examples") {
  CHECK(morita_equivalent(Rational(1, 3), Rational(2, 5)));
  CHECK(morita_equivalent(kSqrt2, QI(1, 1, 2)));
  CHECK_FALSE(morita_equivalent(kSqrt2, kGolden));
  CHECK_FALSE(morita_equivalent(Rational(1, 3), kSqrt2));
  CHECK_FALSE(morita_equivalent(kGolden, Rational(1, 3)));

  // Bounded-matrix oracle agrees on the quadratic examples.
  CHECK(oracle::moebius_witness(field_of(kSqrt2), field_of(QI(1, 1, 2))).has_value());
  CHECK_FALSE(oracle::moebius_witness(field_of(kSqrt2), field_of(kGolden)).has_value());
}

TEST_CASE("morita equivalence is an equivalence relation on twelve slopes") {
  const auto slopes = twelve_slopes();
  for (const auto& a : slopes) {
    CHECK(morita_equivalent(a, a));
    for (const auto& b : slopes) {
      const bool ab = morita_equivalent(a, b);
      CHECK(ab == morita_equivalent(b, a));
      for (const auto& c : slopes) {
        if (ab && morita_equivalent(b, c)) CHECK(morita_equivalent(a, c));
      }
    }
  }
  // sqrt3 and sqrt3/3 = 1/sqrt3 are related by S; sqrt5 and the golden ratio are not.
  CHECK(morita_equivalent(QI(0, 1, 3), QI(0, 3, 3)));
  CHECK_FALSE(morita_equivalent(QI(0, 1, 5), kGolden));
  CHECK_FALSE(morita_equivalent(QI(0, 1, 7), kSqrt2));
}

TEST_CASE("morita equivalence holds for Moebius images and matches the oracle") {
  std::mt19937_64 rng(81);
  const QI seeds[] = {kSqrt2, kGolden, QI(0, 1, 3), QI(0, 1, 7), QI(2, 3, 11)};
  for (int i = 0; i < 100; ++i) {
    const QI& x = seeds[i % 5];
    const IntMatrix2 m = oracle::random_unimodular(rng, 5, true);
    const QI y = x.moebius(m);
    CHECK(morita_equivalent(x, y));
    CHECK(std::abs(y.value() - (m.a * x.value() + m.b) / (m.c * x.value() + m.d)) < 1e-9);
    const auto w = oracle::moebius_witness(field_of(x), field_of(y), 20);
    REQUIRE(w.has_value());
    CHECK(x.moebius(*w) == y);
  }
}

TEST_CASE("inequivalent quadratic pairs have no bounded witness") {
  const std::pair<QI, QI> pairs[] = {
      {kSqrt2, kGolden},       {QI(0, 1, 3), QI(0, 1, 7)}, {QI(0, 1, 5), kGolden},
      {QI(0, 1, 6), QI(0, 1, 2)}, {QI(0, 1, 11), QI(0, 1, 3)}};
  for (const auto& [a, b] : pairs) {
    CHECK_FALSE(morita_equivalent(a, b));
    CHECK_FALSE(oracle::moebius_witness(field_of(a), field_of(b), 20).has_value());
  }
}

TEST_CASE("complete quotients end in a repeating cycle") {
  const auto qs = complete_quotients(kSqrt2);
  REQUIRE(qs.size() >= 2);
  CHECK(qs.front() == kSqrt2);
  CHECK(qs.back() == QI(1, 1, 2));
}
