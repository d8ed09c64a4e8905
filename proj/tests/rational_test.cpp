#include <random>

#include "doctest.h"
#include "kritwahl/error.hpp"
#include "kritwahl/rational.hpp"

using kritwahl::Error;
using kritwahl::ErrorCode;
using kritwahl::Rational;

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
  Rational r(6, -8);
  CHECK(r.num() == -3);
  CHECK(r.den() == 4);
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(0, 5).den() == 1);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic and ordering are exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * 9 + Rational(1, 3) * 6 == Rational(8));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(3, 4) / Rational(3, 8) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
}

TEST_CASE("overflow is reported instead of wrapping") {
  Rational big(INT64_MAX);
  try {
    (void)(big * 2);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Overflow);
  }
}

TEST_CASE("property: addition commutes and subtraction inverts it") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  for (int n = 0; n < 500; ++n) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK(a + b - b == a);
    CHECK(((a < b) || (b < a) || (a == b)));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("decimal rendering uses 15 significant digits, half-even") {
  // Expected strings produced with Python's decimal module, prec=15, ROUND_HALF_EVEN.
  CHECK(Rational(1, 3).to_decimal() == "0.333333333333333");
  CHECK(Rational(2, 3).to_decimal() == "0.666666666666667");
  CHECK(Rational(1, 6).to_decimal() == "0.166666666666667");
  CHECK(Rational(-1, 3).to_decimal() == "-0.333333333333333");
  CHECK(Rational(1234567890123425, 10000000000000000).to_decimal() == "0.123456789012342");
  CHECK(Rational(1234567890123435, 10000000000000000).to_decimal() == "0.123456789012344");
  CHECK(Rational(1000000000000000001, 7).to_decimal() == "142857142857143000");
  CHECK(Rational(1, 700000000000000000).to_decimal() == "0.00000000000000000142857142857143");
  CHECK(Rational(1).to_decimal() == "1");
  CHECK(Rational(1, 2).to_decimal() == "0.5");
  CHECK(Rational(0).to_decimal() == "0");
  CHECK(Rational(8).to_decimal() == "8");
}

TEST_CASE("fixed rendering rounds half to even") {
  CHECK(Rational(100, 3).to_fixed(2) == "33.33");
  CHECK(Rational(200, 3).to_fixed(2) == "66.67");
  CHECK(Rational(25, 2).to_fixed(0) == "12");
  CHECK(Rational(27, 2).to_fixed(0) == "14");
  CHECK(Rational(1, 8).to_fixed(2) == "0.12");
  CHECK(Rational(3, 8).to_fixed(2) == "0.38");
  CHECK(Rational(0).to_fixed(2) == "0.00");
  CHECK(Rational(999, 1000).to_fixed(2) == "1.00");
  CHECK(Rational(-1, 1000).to_fixed(2) == "0.00");
}

TEST_CASE("parsing accepts integers, fractions and decimals") {
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse(" -3/6 ") == Rational(-1, 2));
  CHECK(Rational::parse("7.25") == Rational(29, 4));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse(".5") == Rational(1, 2));
  for (const char* bad : {"", "abc", "1/0", "1/-2", "1.2.3", "--1", "1e5"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(Rational::parse(bad), Error);
  }
}
