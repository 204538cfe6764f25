#include "kwise/rational.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "kwise/error.hpp"

namespace kwise {
namespace {

WideInt wide_abs(WideInt v) { return v < 0 ? -v : v; }

WideInt wide_gcd(WideInt a, WideInt b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    const WideInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  require(ec == std::errc{} && ptr == last && first != last, ErrorKind::Parse,
          "bad integer '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(WideInt num, WideInt den) {
  require(den != 0, ErrorKind::InvalidParameter, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const WideInt g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr auto lo = static_cast<WideInt>(std::numeric_limits<std::int64_t>::min());
  constexpr auto hi = static_cast<WideInt>(std::numeric_limits<std::int64_t>::max());
  require(num >= lo && num <= hi && den <= hi, ErrorKind::CapacityExceeded,
          "rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  require(!text.empty(), ErrorKind::Parse, "empty rational");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    require(frac.size() <= 15, ErrorKind::Parse, "too many decimals in '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    const WideInt num = static_cast<WideInt>(w < 0 ? -w : w) * scale + f;
    return from_wide(negative ? -num : num, scale);
  }
  return {parse_int(text), 1};
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<WideInt>(a.num_) * b.den_ + static_cast<WideInt>(b.num_) * a.den_,
                             static_cast<WideInt>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::from_wide(static_cast<WideInt>(a.num_) * b.num_,
                             static_cast<WideInt>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  require(b.num_ != 0, ErrorKind::InvalidParameter, "division by zero rational");
  return Rational::from_wide(static_cast<WideInt>(a.num_) * b.den_,
                             static_cast<WideInt>(a.den_) * b.num_);
}

Rational ratio_or_zero(std::int64_t p, std::int64_t q) { return q == 0 ? Rational{} : Rational{p, q}; }

}  // namespace kwise
