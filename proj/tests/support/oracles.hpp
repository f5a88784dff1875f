#pragma once

// Independent reference computations used to freeze expected values and to
// cross-check the library. None of these call the routine they check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "teichkit/algebra/matrix2.hpp"
#include "teichkit/algebra/quadratic_irrational.hpp"
#include "teichkit/algebra/rational.hpp"

namespace oracle {

using Complex = std::complex<double>;

/// First p in 1..64 with |big^p - small| < eps, by repeated multiplication.
inline std::optional<int> resonance_brute_force(Complex big, Complex small, double eps = 1e-9) {
  Complex power = 1.0;
  for (int p = 1; p <= 64; ++p) {
    power *= big;
    if (std::abs(power - small) < eps) return p;
  }
  return std::nullopt;
}

/// Extended Euclid: returns (x, y) with a x + b y = gcd(a, b) >= 0.
inline std::pair<std::int64_t, std::int64_t> bezout(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  if (old_r < 0) return {-old_s, -old_t};
  return {old_s, old_t};
}

/// Canonical boundary convention of the fundamental domain: Re in [-1/2, 1/2),
/// and points of the unit arc with Re > 0 replaced by their mirror image.
inline Complex canonical_boundary(Complex t, double eps) {
  if (t.real() > 0.5 - eps) t -= 1.0;
  if (std::abs(std::abs(t) - 1.0) <= eps && t.real() > eps) t = -std::conj(t);
  return t;
}

struct DomainOracle {
  Complex point;         // canonical representative
  std::size_t hits = 0;  // bottom rows (c, d) landing in the domain
  bool consistent = true;
};

/// Enumerates every SL2(Z) matrix whose bottom row (c, d) has entries in
/// [-bound, bound]; the top row is fixed up to T^k by Bezout and the integer
/// translation k is chosen to land in |Re| <= 1/2. Keeps the images in the
/// closed fundamental domain.
inline DomainOracle fundamental_domain_brute_force(Complex tau, std::int64_t bound = 50, double eps = 1e-9) {
  DomainOracle out;
  bool first = true;
  for (std::int64_t c = -bound; c <= bound; ++c) {
    for (std::int64_t d = -bound; d <= bound; ++d) {
      if (std::gcd(c, d) != 1) continue;
      const auto [x, y] = bezout(d, -c);  // d x - c y = 1  ->  a = x, b = y
      const Complex den = static_cast<double>(c) * tau + static_cast<double>(d);
      const Complex num = static_cast<double>(x) * tau + static_cast<double>(y);
      Complex img = num / den;
      img = Complex(img.real() - std::floor(img.real() + 0.5), tau.imag() / std::norm(den));
      if (std::abs(img) < 1.0 - eps) continue;
      const Complex canon = canonical_boundary(img, eps);
      ++out.hits;
      if (first) {
        out.point = canon;
        first = false;
      } else if (std::abs(canon - out.point) > 1e-7) {
        out.consistent = false;
      }
    }
  }
  return out;
}

/// alpha = u + v sqrt(r), r squarefree, computed by trial division.
struct FieldValue {
  std::int64_t r;
  teichkit::Rational u;
  teichkit::Rational v;
};

inline FieldValue field_value(std::int64_t p, std::int64_t q, std::int64_t d) {
  std::int64_t f = 1, r = d;
  for (std::int64_t k = 2; k * k <= r; ++k) {
    while (r % (k * k) == 0) {
      r /= k * k;
      f *= k;
    }
  }
  return {r, teichkit::Rational(p, q), teichkit::Rational(f, q)};
}

/// Searches integer matrices [[a, b], [c, d]] with |entries| <= bound and
/// det = +-1 such that beta = (a alpha + b) / (c alpha + d). For each bottom
/// row the top row is forced: beta (c alpha + d) must equal a alpha + b.
inline std::optional<teichkit::IntMatrix2> moebius_witness(const FieldValue& alpha, const FieldValue& beta,
                                                           std::int64_t bound = 20) {
  using teichkit::Rational;
  if (alpha.r != beta.r) return std::nullopt;
  const Rational r(alpha.r);
  for (std::int64_t c = -bound; c <= bound; ++c) {
    for (std::int64_t d = -bound; d <= bound; ++d) {
      if (c == 0 && d == 0) continue;
      const Rational du = Rational(c) * alpha.u + Rational(d);
      const Rational dv = Rational(c) * alpha.v;
      const Rational wu = beta.u * du + beta.v * dv * r;
      const Rational wv = beta.u * dv + beta.v * du;
      const Rational a = wv / alpha.v;
      if (!a.is_integer()) continue;
      const Rational b = wu - a * alpha.u;
      if (!b.is_integer()) continue;
      const std::int64_t ai = a.num();
      const std::int64_t bi = b.num();
      if (std::abs(ai) > bound || std::abs(bi) > bound) continue;
      const std::int64_t det = ai * d - bi * c;
      if (det == 1 || det == -1) return teichkit::IntMatrix2{ai, bi, c, d};
    }
  }
  return std::nullopt;
}

/// Sign of u + v sqrt(r), exactly.
inline int field_sign(const FieldValue& x) {
  using teichkit::Rational;
  const Rational zero(0);
  const int su = x.u > zero ? 1 : (x.u < zero ? -1 : 0);
  const int sv = x.v > zero ? 1 : (x.v < zero ? -1 : 0);
  if (su == 0 || sv == 0 || su == sv) return su != 0 ? su : sv;
  return x.u * x.u > x.v * x.v * Rational(x.r) ? su : sv;
}

/// Continued fraction of u + v sqrt(r) by exact field arithmetic, returned as
/// (preperiod, period).
inline std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> field_continued_fraction(FieldValue x) {
  using teichkit::Rational;
  std::vector<std::pair<Rational, Rational>> seen;
  std::vector<std::int64_t> terms;
  for (;;) {
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i].first == x.u && seen[i].second == x.v) {
        return {std::vector<std::int64_t>(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(i)),
                std::vector<std::int64_t>(terms.begin() + static_cast<std::ptrdiff_t>(i), terms.end())};
      }
    }
    seen.emplace_back(x.u, x.v);
    const double approx = x.u.to_double() + x.v.to_double() * std::sqrt(static_cast<double>(x.r));
    std::int64_t n = static_cast<std::int64_t>(std::floor(approx));
    while (field_sign({x.r, x.u - Rational(n), x.v}) < 0) --n;
    while (field_sign({x.r, x.u - Rational(n + 1), x.v}) >= 0) ++n;
    terms.push_back(n);
    const Rational fu = x.u - Rational(n);
    const Rational norm = fu * fu - x.v * x.v * Rational(x.r);
    x = {x.r, fu / norm, -x.v / norm};
  }
}

inline Complex random_complex(std::mt19937_64& rng, double lo_mod, double hi_mod) {
  std::uniform_real_distribution<double> mod(lo_mod, hi_mod);
  std::uniform_real_distribution<double> arg(-M_PI, M_PI);
  return std::polar(mod(rng), arg(rng));
}

/// Random 2x2 complex matrix with 2-norm condition number <= max_cond.
inline teichkit::Matrix2C random_well_conditioned(std::mt19937_64& rng, double max_cond = 100.0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const teichkit::Matrix2C m({u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)});
    // sigma_max * sigma_min = |det|, sigma_max^2 + sigma_min^2 = ||m||_F^2.
    const double fro2 = std::norm(m.a()) + std::norm(m.b()) + std::norm(m.c()) + std::norm(m.d());
    const double det = std::abs(m.det());
    if (det < 1e-12) continue;
    const double disc = std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det));
    const double smax = std::sqrt((fro2 + disc) / 2.0);
    const double smin = det / smax;
    if (smax / smin <= max_cond) return m;
  }
}

/// Random contracting matrix: random eigenvalues with moduli in (lo, hi)
/// conjugated by a random well-conditioned matrix.
inline teichkit::Matrix2C random_contracting(std::mt19937_64& rng, double lo = 0.05, double hi = 0.95) {
  const Complex l1 = random_complex(rng, lo, hi);
  const Complex l2 = random_complex(rng, lo, hi);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const teichkit::Matrix2C upper(l1, {u(rng), u(rng)}, 0.0, l2);
  const teichkit::Matrix2C p = random_well_conditioned(rng, 10.0);
  return p * upper * p.inverse();
}

/// Random unimodular integer matrix with entries in [-bound, bound] and the
/// requested determinant (+1 or -1).
inline teichkit::IntMatrix2 random_unimodular(std::mt19937_64& rng, std::int64_t bound, bool allow_negative_det) {
  std::uniform_int_distribution<std::int64_t> e(-bound, bound);
  for (;;) {
    const teichkit::IntMatrix2 m{e(rng), e(rng), e(rng), e(rng)};
    const std::int64_t det = m.a * m.d - m.b * m.c;
    if (det == 1 || (allow_negative_det && det == -1)) return m;
  }
}

}  // namespace oracle
