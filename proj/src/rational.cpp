#include "kritwahl/rational.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <vector>

#include "kritwahl/error.hpp"

namespace kritwahl {
namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Digits of |num|/den as integer-part digits followed by fractional digits.
// `point` is the number of integer digits. Generation stops once
// `fraction_digits` fractional digits exist; `sticky` reports whether any
// nonzero remainder is left beyond them.
struct DigitExpansion {
  std::vector<int> digits;
  std::size_t point = 0;
  bool sticky = false;
};

DigitExpansion expand(std::int64_t num, std::int64_t den, std::size_t fraction_digits) {
  DigitExpansion e;
  i128 n = abs128(num);
  i128 integer = n / den;
  i128 rem = n % den;
  for (char c : u128_to_string(static_cast<unsigned __int128>(integer))) {
    e.digits.push_back(c - '0');
  }
  e.point = e.digits.size();
  for (std::size_t i = 0; i < fraction_digits; ++i) {
    rem *= 10;
    e.digits.push_back(static_cast<int>(rem / den));
    rem %= den;
  }
  e.sticky = rem != 0;
  return e;
}

// Keeps digits[0, keep) and rounds half-to-even using digits[keep] and the
// sticky remainder. May grow the integer part by one digit.
void round_half_even(DigitExpansion& e, std::size_t keep) {
  if (keep >= e.digits.size()) return;
  int next = e.digits[keep];
  bool rest = e.sticky;
  for (std::size_t i = keep + 1; i < e.digits.size(); ++i) rest = rest || e.digits[i] != 0;
  bool last_odd = keep > 0 && (e.digits[keep - 1] % 2 == 1);
  bool up = next > 5 || (next == 5 && (rest || last_odd));
  for (std::size_t i = keep; i < e.digits.size(); ++i) e.digits[i] = 0;
  e.sticky = false;
  if (!up) return;
  std::size_t i = keep;
  while (i > 0) {
    --i;
    if (++e.digits[i] < 10) return;
    e.digits[i] = 0;
  }
  e.digits.insert(e.digits.begin(), 1);
  ++e.point;
}

std::string render(const DigitExpansion& e, bool negative, std::size_t fraction_digits,
                   bool strip) {
  std::string out;
  std::size_t first = 0;
  while (first + 1 < e.point && e.digits[first] == 0) ++first;
  for (std::size_t i = first; i < e.point; ++i) out.push_back(static_cast<char>('0' + e.digits[i]));
  if (e.point == 0) out = "0";
  std::string frac;
  for (std::size_t i = e.point; i < e.point + fraction_digits && i < e.digits.size(); ++i) {
    frac.push_back(static_cast<char>('0' + e.digits[i]));
  }
  if (strip) {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }
  if (!frac.empty()) out += "." + frac;
  bool all_zero = std::all_of(e.digits.begin(), e.digits.end(), [](int d) { return d == 0; });
  if (negative && !all_zero) out.insert(out.begin(), '-');
  return out;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(i128 num, i128 den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) throw Error(ErrorCode::Overflow, "rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::operator-() const { return from_wide(-static_cast<i128>(num_), den_); }

Rational& Rational::operator+=(const Rational& o) {
  return *this = from_wide(static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_,
                           static_cast<i128>(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) {
  return *this = from_wide(static_cast<i128>(num_) * o.den_ - static_cast<i128>(o.num_) * den_,
                           static_cast<i128>(den_) * o.den_);
}

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(static_cast<i128>(num_) * o.num_, static_cast<i128>(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  return *this = from_wide(static_cast<i128>(num_) * o.den_, static_cast<i128>(den_) * o.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  i128 lhs = static_cast<i128>(a.num_) * b.den_;
  i128 rhs = static_cast<i128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal(int significant) const {
  if (significant < 1) throw Error(ErrorCode::InvalidArgument, "need at least one digit");
  if (num_ == 0) return "0";
  // Find enough fractional digits to see `significant` significant ones.
  // Leading fractional zeros are bounded by the digit count of den.
  std::size_t need = static_cast<std::size_t>(significant) + 20;
  DigitExpansion e = expand(num_, den_, need);
  std::size_t lead = 0;
  while (lead < e.digits.size() && e.digits[lead] == 0) ++lead;
  round_half_even(e, lead + static_cast<std::size_t>(significant));
  return render(e, num_ < 0, need, true);
}

std::string Rational::to_fixed(int places) const {
  if (places < 0) throw Error(ErrorCode::InvalidArgument, "negative precision");
  auto p = static_cast<std::size_t>(places);
  DigitExpansion e = expand(num_, den_, p + 1);
  round_half_even(e, e.point + p);
  return render(e, num_ < 0, p, false);
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::ParseError, "not a number: '" + std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s, bool allow_sign) -> i128 {
    bool neg = false;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      s.remove_prefix(1);
    }
    if (s.empty() || s.size() > 19) throw fail();
    i128 v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw fail();
      v = v * 10 + (c - '0');
    }
    return neg ? -v : v;
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    i128 n = parse_int(text.substr(0, slash), true);
    i128 d = parse_int(text.substr(slash + 1), false);
    if (d == 0) throw fail();
    return from_wide(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
    if (whole.empty() && frac.empty()) throw fail();
    i128 w = whole.empty() ? 0 : parse_int(whole, false);
    i128 f = frac.empty() ? 0 : parse_int(frac, false);
    i128 scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    i128 n = w * scale + f;
    return from_wide(neg ? -n : n, scale);
  }
  return from_wide(parse_int(text, true), 1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace kritwahl
