#include <catch2/catch_amalgamated.hpp>

#include "ortho/rational.hpp"
#include "ortho/sampling.hpp"

using namespace ortho;

TEST_CASE("parsing accepts p and p/q forms") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("5/10") == Rational(1, 2));
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("123456789123456789123456789/3") ==
        Rational(Integer("123456789123456789123456789"), Integer(3)));
}

TEST_CASE("parsing rejects malformed text") {
  for (const char* bad : {"", "-", "/", "3/", "/4", "3/-4", "--3", "+3", "a", "1.5", "1 / 2"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
    CHECK_FALSE(try_parse_rational(bad).has_value());
  }
}

TEST_CASE("zero denominator is reported as such") {
  try {
    parse_rational("1/0");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("zero denominator") != std::string::npos);
  }
}

TEST_CASE("make_rational normalizes signs and rejects zero denominators") {
  CHECK(make_rational(6, -8) == Rational(-3, 4));
  CHECK(to_string(make_rational(6, -8)) == "-3/4");
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("to_string emits canonical text") {
  CHECK(to_string(Rational(0)) == "0");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(to_string(Rational(-7)) == "-7");
  CHECK(to_string(Rational(1, 2)) == "1/2");
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
}

TEST_CASE("string round trip is the identity") {
  Rng rng(42);
  for (int i = 0; i < 500; ++i) {
    const Rational q = make_rational(rng.uniform(-1000000, 1000000), rng.uniform(1, 1000000));
    CHECK(parse_rational(to_string(q)) == q);
  }
}

TEST_CASE("values stay canonical under arithmetic") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rational a = make_rational(rng.uniform(-100000, 100000), rng.uniform(1, 1000));
    const Rational b = make_rational(rng.uniform(-100000, 100000), rng.uniform(1, 1000));
    const Rational sum = a + b;
    CHECK(denominator(sum) > 0);
    CHECK(gcd(abs(numerator(sum)), denominator(sum)) == 1);
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a * b) / b == a);
  }
}

TEST_CASE("to_double matches the quotient") {
  CHECK(to_double(Rational(1, 2)) == 0.5);
  CHECK(to_double(Rational(-7, 4)) == -1.75);
}
