#include <doctest.h>

#include <random>

#include "normsurf/rational.hpp"

using normsurf::BigInt;
using normsurf::Error;
using normsurf::Rational;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-1, -2).str() == "1/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7, 1).str() == "7");
    CHECK(Rational(33, 23).str() == "33/23");
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(2, 4).numerator() == 1);
}

TEST_CASE("parse round trip") {
    for (const char* s : {"0", "7", "-7", "1/2", "-33/23", "30/29", "61/59"}) {
        Rational r = Rational::parse(s);
        CHECK(r.str() == s);
    }
    CHECK(Rational::parse("2/4").str() == "1/2");
    CHECK(Rational::parse("+3").str() == "3");
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("a/b"), Error);
    CHECK_THROWS_AS(Rational::parse("1/"), Error);
}

TEST_CASE("arithmetic spot checks") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(11, 6) + Rational(1, 42) == Rational(13, 7));
    CHECK(Rational(3, 2) + Rational(1, 54) == Rational(41, 27));
    CHECK(Rational(2) - Rational(57, 59) == Rational(61, 59));
    CHECK(Rational(-3, 7) * Rational(-7, 3) == Rational(1));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK((-Rational(5, 3)).str() == "-5/3");
    CHECK(Rational(-5, 3).abs() == Rational(5, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 5) > Rational(4, 3));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(2, 4) >= Rational(1, 2));
    CHECK(Rational(30, 29).sign() == 1);
    CHECK(Rational(-1, 9).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("floor") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6).floor() == 6);
    CHECK(Rational(133, 162).floor() == 0);
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 30);
    auto rnd = [&]() { return Rational(num(rng), den(rng)); };
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Rational(0) == a);
        CHECK(a * Rational(1) == a);
        CHECK(a - a == Rational(0));
        if (!b.is_zero()) CHECK((a / b) * b == a);
        CHECK(((a < b) ? (b > a) : (b <= a)));
    }
}

TEST_CASE("values beyond 64 bits stay exact") {
    BigInt n("123456789012345678901234567890");
    Rational big(n, BigInt(7));
    CHECK(big * big == Rational(n * n, BigInt(49)));
    CHECK(big * big * Rational(49) == Rational(n * n));
    Rational acc;
    for (int i = 0; i < 100; ++i) acc += Rational(1, 1000000);
    CHECK(acc == Rational(1, 10000));
}
