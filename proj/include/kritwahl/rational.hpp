#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace kritwahl {

/// Exact fraction over 64-bit integers, always kept in lowest terms with a
/// positive denominator. Intermediate products are formed in 128 bits; a
/// result that does not fit back into 64 bits raises ErrorCode::Overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  /// Up to `significant` significant digits, rounded half-to-even, trailing
  /// fractional zeros removed ("0.5", "0.166666666666667", "8").
  std::string to_decimal(int significant = 15) const;

  /// Exactly `places` fractional digits, rounded half-to-even ("33.33").
  std::string to_fixed(int places) const;

  /// Accepts "n", "n/d", and plain decimals such as "-7.25".
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace kritwahl
