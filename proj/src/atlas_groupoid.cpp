#include "teichkit/atlas_groupoid.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "teichkit/hopf.hpp"

namespace teichkit::atlas {

namespace {

std::string describe(Complex z) {
  std::ostringstream out;
  out.precision(6);
  out << '(' << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
  return out.str();
}

std::string describe(const Matrix2C& m) {
  return "[[" + describe(m.a()) + "," + describe(m.b()) + "],[" + describe(m.c()) + "," + describe(m.d()) + "]]";
}

std::string describe(const GroupElement& g) { return "(A=" + describe(g.a()) + ", t=" + describe(g.t()) + ")"; }
std::string describe(const AtlasPoint& m) { return "(A=" + describe(m.a()) + ", t=" + describe(m.t()) + ")"; }

// Tolerance relative to the size of the values compared.
Tolerance relative(Tolerance tol, double scale) { return tol.scaled(std::max(1.0, scale)); }

double scale_of(const AtlasPoint& m) { return std::max(m.a().max_norm(), std::abs(m.t())); }

}  // namespace

GroupElement::GroupElement(const Matrix2C& a, Complex t, Tolerance tol) : a_(a), t_(checked(t)) {
  if (!a.invertible(tol)) throw Error(ErrorCode::SingularMatrix, "group element needs an invertible matrix");
}

AtlasPoint::AtlasPoint(const Matrix2C& a, Complex t, Tolerance tol) : a_(a), t_(checked(t)) {
  if (!hopf::is_contracting(a, tol)) throw Error(ErrorCode::NotContracting, "atlas point needs a contraction");
}

GroupElement g_identity() { return {Matrix2C::identity(), 0.0}; }

GroupElement g_mul(const GroupElement& x, const GroupElement& y) {
  return {GroupElement::Unchecked{}, x.a() * y.a(), checked(x.t() + y.t() * x.a().det())};
}

GroupElement g_inverse(const GroupElement& x, Tolerance tol) {
  return {GroupElement::Unchecked{}, x.a().inverse(tol), checked(-x.t() / x.a().det())};
}

GroupElement g_pow(const GroupElement& x, std::int64_t p, Tolerance tol) {
  const GroupElement base = p < 0 ? g_inverse(x, tol) : x;
  GroupElement result = g_identity();
  for (std::int64_t k = 0; k < (p < 0 ? -p : p); ++k) result = g_mul(result, base);
  return result;
}

bool approx_equal(const GroupElement& x, const GroupElement& y, Tolerance tol) {
  return approx_equal(x.a(), y.a(), tol) && teichkit::approx_equal(x.t(), y.t(), tol);
}

bool approx_equal(const AtlasPoint& x, const AtlasPoint& y, Tolerance tol) {
  return approx_equal(x.a(), y.a(), tol) && teichkit::approx_equal(x.t(), y.t(), tol);
}

std::pair<GroupElement, AtlasPoint> z_action(std::int64_t p, const GroupElement& g, const AtlasPoint& m,
                                             const AtlasStructure& structure, Tolerance tol) {
  return {g_mul(g_pow(structure.injection(m), p, tol), g), m};
}

AtlasPoint target(const GroupElement& g, const AtlasPoint& m, const AtlasStructure& structure) {
  return structure.action(m, g);
}

AtlasStructure trivial_structure() {
  return {"trivial", [](const AtlasPoint& m, const GroupElement&) { return m; },
          [](const AtlasPoint&) { return g_identity(); }};
}

AtlasStructure conjugation_structure() {
  return {"conjugation",
          [](const AtlasPoint& m, const GroupElement& g) {
            const Matrix2C& b = g.a();
            return AtlasPoint(b.inverse() * m.a() * b, m.t() * b.det());
          },
          [](const AtlasPoint& m) { return GroupElement(m.a(), 0.0); }};
}

bool CheckReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawReport& l) { return l.passed; });
}

const LawReport* CheckReport::find(const std::string& name) const {
  for (const auto& law : laws) {
    if (law.name == name) return &law;
  }
  return nullptr;
}

Sampler::Sampler(std::uint64_t seed) : engine_(seed) {}

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

Complex Sampler::complex_in_box(double half_width) {
  return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
}

GroupElement Sampler::group_element() {
  for (;;) {
    const Matrix2C a(complex_in_box(1.0), complex_in_box(1.0), complex_in_box(1.0), complex_in_box(1.0));
    if (std::abs(a.det()) >= 0.1) return {a, complex_in_box(2.0)};
  }
}

AtlasPoint Sampler::atlas_point() {
  for (;;) {
    // Entries of modulus <= 0.45*sqrt(2) keep the spectral radius below 1.
    const Matrix2C a(complex_in_box(0.45), complex_in_box(0.45), complex_in_box(0.45), complex_in_box(0.45));
    if (hopf::is_contracting(a)) return {a, complex_in_box(2.0)};
  }
}

std::int64_t Sampler::power(std::int64_t bound) {
  return std::uniform_int_distribution<std::int64_t>(-bound, bound)(engine_);
}

CheckReport groupoid_check(const AtlasStructure& structure, std::size_t samples, std::uint64_t seed, Tolerance tol) {
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "groupoid_check needs at least one sample");
  const auto named = [](std::string name) {
    LawReport law;
    law.name = std::move(name);
    return law;
  };
  LawReport identity = named("action_identity");
  LawReport compat = named("action_compatibility");
  LawReport z_inv = named("z_invariance");
  LawReport closure = named("closure");
  const auto fail = [](LawReport& law, std::string text) {
    if (law.passed) law.counterexample = std::move(text);
    law.passed = false;
  };

  Sampler sampler(seed);
  const Tolerance loose = tol.scaled(100.0);
  for (std::size_t i = 0; i < samples; ++i) {
    const AtlasPoint m = sampler.atlas_point();
    const GroupElement g = sampler.group_element();
    const GroupElement h = sampler.group_element();
    const std::int64_t p = sampler.power(3);

    ++closure.checked;
    std::optional<AtlasPoint> mg;
    std::optional<AtlasPoint> mg_h;
    std::optional<AtlasPoint> m_gh;
    try {
      mg.emplace(structure.action(m, g));
      mg_h.emplace(structure.action(*mg, h));
      m_gh.emplace(structure.action(m, g_mul(g, h)));
    } catch (const Error& e) {
      fail(closure, "m=" + describe(m) + " g=" + describe(g) + " h=" + describe(h) + ": " + e.what());
      continue;
    }

    ++identity.checked;
    const AtlasPoint me = structure.action(m, g_identity());
    if (!approx_equal(me, m, relative(loose, scale_of(m)))) {
      fail(identity, "m=" + describe(m) + " but m.e=" + describe(me));
    }

    ++compat.checked;
    if (!approx_equal(*m_gh, *mg_h, relative(loose, std::max(scale_of(*m_gh), scale_of(*mg_h))))) {
      fail(compat, "m=" + describe(m) + " g=" + describe(g) + " h=" + describe(h) + ": m.(g*h)=" +
                       describe(*m_gh) + " vs (m.g).h=" + describe(*mg_h));
    }

    ++z_inv.checked;
    const auto [g_shifted, m_shifted] = z_action(p, g, m, structure, tol);
    const AtlasPoint moved = target(g_shifted, m_shifted, structure);
    const bool source_ok = approx_equal(source(g_shifted, m_shifted), m, tol);
    const bool target_ok = approx_equal(moved, *mg, relative(loose, std::max(scale_of(moved), scale_of(*mg))));
    if (!source_ok || !target_ok) {
      fail(z_inv, "p=" + std::to_string(p) + " m=" + describe(m) + " g=" + describe(g) + ": target " +
                      describe(*mg) + " became " + describe(moved));
    }
  }
  return {{identity, compat, z_inv, closure}};
}

}  // namespace teichkit::atlas
