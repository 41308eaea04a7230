#include <catch2/catch_amalgamated.hpp>

#include "subpath/numeric.hpp"

using namespace subpath;

TEST_CASE("binomial is combinatorial") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(0, 1) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(-3, 2) == 0);
    CHECK(binomial(BigCount(60), 30) == BigCount("118264581564861424"));
}

TEST_CASE("factorial and powers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(pow2(0) == 1);
    CHECK(pow2(64) == BigCount("18446744073709551616"));
    CHECK(pow10(3) == 1000);
}

TEST_CASE("half_exact rejects odd values") {
    CHECK(half_exact(BigCount(14), "even") == 7);
    CHECK(half_exact(BigCount(0), "even") == 0);
    CHECK_THROWS_AS(half_exact(BigCount(7), "odd"), std::logic_error);
    CHECK_THROWS_AS(half_exact(BigCount(-2), "negative"), std::logic_error);
}

TEST_CASE("parse_rational") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("2/4") == Rational(1, 2)); // canonicalized
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK(parse_rational("0/5") == 0);
    CHECK_THROWS_AS(parse_rational(""), input_error);
    CHECK_THROWS_AS(parse_rational("1/0"), input_error);
    CHECK_THROWS_AS(parse_rational("a/2"), input_error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), input_error);
    CHECK_THROWS_AS(parse_rational("1.5"), input_error);
    CHECK_THROWS_AS(parse_rational("1/-2"), input_error);
}

TEST_CASE("decimal_string renders 12 significant digits") {
    CHECK(decimal_string(Rational(0)) == "0");
    CHECK(decimal_string(Rational(1)) == "1.00000000000");
    CHECK(decimal_string(Rational(23, 2)) == "11.5000000000");
    CHECK(decimal_string(Rational(1, 3)) == "0.333333333333");
    CHECK(decimal_string(Rational(2, 3)) == "0.666666666667");
    CHECK(decimal_string(Rational(-23, 2)) == "-11.5000000000");
    CHECK(decimal_string(Rational(1, 1000)) == "0.00100000000000");
    // round half up at the 12th digit
    CHECK(decimal_string(Rational(1000000000005L, 10000000000000L)) == "0.100000000001");
    // carry across the leading digit: 0.9999... rounds to 1.00000000000
    CHECK(decimal_string(Rational(999999999999999L, 1000000000000000L)) ==
          "1.00000000000");
    // large integers keep exactly 12 significant digits
    CHECK(decimal_string(Rational(BigCount("123456789012345"))) == "123456789012000");
    CHECK(decimal_string(Rational(339, 4)) == "84.7500000000");
}

TEST_CASE("decimal_string with custom precision") {
    CHECK(decimal_string(Rational(1, 3), 3) == "0.333");
    CHECK(decimal_string(Rational(1999, 1000), 3) == "2.00");
    CHECK(decimal_string(Rational(5), 1) == "5");
    CHECK(decimal_string(Rational(95, 10), 1) == "10");
}

TEST_CASE("sqrt_decimal_string") {
    CHECK(sqrt_decimal_string(Rational(0)) == "0");
    CHECK(sqrt_decimal_string(Rational(4)) == "2.00000000000");
    CHECK(sqrt_decimal_string(Rational(2)) == "1.41421356237");
    CHECK(sqrt_decimal_string(Rational(1, 4)) == "0.500000000000");
    // 73.7428573401^2, the frozen experiment stddev, round-trips
    Rational v(BigCount("543800898084841"), BigCount("100000000000"));
    CHECK(sqrt_decimal_string(v).substr(0, 7) == "73.7428");
}
