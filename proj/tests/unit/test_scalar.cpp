#include <doctest.h>

#include <cmath>

#include "tess/error.hpp"
#include "tess/linear_text.hpp"
#include "tess/scalar.hpp"

using tess::Rational;

TEST_CASE("parse_rational accepts integers, fractions and decimals") {
  CHECK(tess::parse_rational("7") == Rational(7));
  CHECK(tess::parse_rational("-3/4") == Rational(-3, 4));
  CHECK(tess::parse_rational("0.125") == Rational(1, 8));
  CHECK(tess::parse_rational("6/8") == Rational(3, 4));
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(tess::parse_rational(""), tess::SyntaxError);
  CHECK_THROWS_AS(tess::parse_rational("1/0"), tess::Error);
  CHECK_THROWS_AS(tess::parse_rational("abc"), tess::SyntaxError);
  CHECK_THROWS_AS(tess::parse_rational("1/"), tess::SyntaxError);
}

TEST_CASE("exact_sqrt finds rational square roots only") {
  Rational r;
  CHECK(tess::exact_sqrt(Rational(9, 4), r));
  CHECK(r == Rational(3, 2));
  CHECK(tess::exact_sqrt(Rational(0), r));
  CHECK(r == 0);
  CHECK_FALSE(tess::exact_sqrt(Rational(2), r));
  CHECK_FALSE(tess::exact_sqrt(Rational(-4), r));
}

TEST_CASE("best_rational recovers small fractions from doubles") {
  CHECK(tess::best_rational(8.0 / 3.0, 1000) == Rational(8, 3));
  CHECK(tess::best_rational(-0.2, 1000) == Rational(-1, 5));
  CHECK(tess::best_rational(5.0, 10) == Rational(5));
}

TEST_CASE("format_double uses 17 significant digits") {
  CHECK(tess::format_double(0.1) == "0.10000000000000001");
  CHECK(tess::format_double(-0.0) == "0");
  CHECK(tess::format_double(2.0) == "2");
}

TEST_CASE("rational to_string") {
  CHECK(tess::to_string(Rational(-8, 3)) == "-8/3");
  CHECK(tess::to_string(Rational(4)) == "4");
}

TEST_CASE("parse_combination reads units and coefficients") {
  tess::CombinationSyntax syntax{{"i", "h", "k"}, false, {}};
  auto c = tess::parse_combination("1/2 - 3*i + h - k", syntax);
  CHECK(c[0].re == Rational(1, 2));
  CHECK(c[1].re == Rational(-3));
  CHECK(c[2].re == Rational(1));
  CHECK(c[3].re == Rational(-1));

  auto d = tess::parse_combination("2i + 3i", syntax);
  CHECK(d[1].re == Rational(5));
}

TEST_CASE("parse_combination reports error positions") {
  tess::CombinationSyntax syntax{{"i", "h", "k"}, false, {}};
  try {
    tess::parse_combination("1 + q", syntax);
    FAIL("expected SyntaxError");
  } catch (const tess::SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(tess::parse_combination("i*h", syntax), tess::SyntaxError);
  CHECK_THROWS_AS(tess::parse_combination("1 +", syntax), tess::SyntaxError);
}

TEST_CASE("format_combination skips zeros and bare unit coefficients") {
  CHECK(tess::format_combination({"0", "1", "-1", "2"}, {"", "i", "h", "k"}) == "i - h + 2*k");
  CHECK(tess::format_combination({"0", "0", "0", "0"}, {"", "i", "h", "k"}) == "0");
  CHECK(tess::format_combination({"-1/2", "0", "0", "1/2"}, {"", "i", "h", "k"}) ==
        "-1/2 + 1/2*k");
}
