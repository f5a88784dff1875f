#include "teichkit/algebra/rational.hpp"

#include <charconv>
#include <limits>

#include "teichkit/algebra/checked_int.hpp"
#include "teichkit/error.hpp"

namespace teichkit {

namespace {

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 x, __int128 y) {
  x = abs128(x);
  y = abs128(y);
  while (y != 0) {
    const __int128 r = x % y;
    x = y;
    y = r;
  }
  return x;
}

std::int64_t narrow(__int128 x) {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::Overflow, "rational component exceeds 64 bits");
  }
  return static_cast<std::int64_t>(x);
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw Error(ErrorCode::InvalidArgument, "malformed integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  Rational r;
  r.num_ = narrow(g == 0 ? num : num / g);
  r.den_ = narrow(g == 0 ? den : den / g);
  return r;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::int64_t Rational::floor() const { return detail::floor_div(num_, den_); }

std::string Rational::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<__int128>(num_), den_); }

Rational operator+(const Rational& x, const Rational& y) {
  return Rational::from_wide(static_cast<__int128>(x.num_) * y.den_ + static_cast<__int128>(y.num_) * x.den_,
                             static_cast<__int128>(x.den_) * y.den_);
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  return Rational::from_wide(static_cast<__int128>(x.num_) * y.num_, static_cast<__int128>(x.den_) * y.den_);
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero rational");
  return Rational::from_wide(static_cast<__int128>(x.num_) * y.den_, static_cast<__int128>(x.den_) * y.num_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  return static_cast<__int128>(x.num_) * y.den_ <=> static_cast<__int128>(y.num_) * x.den_;
}

}  // namespace teichkit
