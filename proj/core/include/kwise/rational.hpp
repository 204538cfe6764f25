#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kwise {

__extension__ typedef __int128 WideInt;

/// Exact rational with 64-bit numerator and positive denominator, always in
/// lowest terms. Comparisons cross-multiply in 128-bit, so verdicts never
/// depend on floating point.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);  // NOLINT(google-explicit-constructor)

  [[nodiscard]] std::int64_t num() const noexcept { return num_; }
  [[nodiscard]] std::int64_t den() const noexcept { return den_; }

  [[nodiscard]] double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  [[nodiscard]] std::string to_string() const;

  /// Accepts "p/q", "p" or a short decimal such as "0.25".
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return {-num_, den_}; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
    const WideInt lhs = static_cast<WideInt>(a.num_) * b.den_;
    const WideInt rhs = static_cast<WideInt>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  static Rational from_wide(WideInt num, WideInt den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// p/q if q != 0, else 0.
[[nodiscard]] Rational ratio_or_zero(std::int64_t p, std::int64_t q);

}  // namespace kwise
