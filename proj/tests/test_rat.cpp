#include <doctest.h>

#include <random>

#include "euclid/rat.hpp"

using namespace euclid;

TEST_CASE("canonical form on construction") {
    Rat r(Int(6), Int(4));
    CHECK(r.numerator() == 3);
    CHECK(r.denominator() == 2);
    Rat n(Int(3), Int(-6));
    CHECK(n.numerator() == -1);
    CHECK(n.denominator() == 2);
    CHECK(Rat(Int(0), Int(17)) == Rat(0));
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), domain_error);
}

TEST_CASE("exact arithmetic and ordering") {
    Rat a(1, 3), b(1, 6);
    CHECK(a + b == Rat(1, 2));
    CHECK(a - b == Rat(1, 6));
    CHECK(a * b == Rat(1, 18));
    CHECK(a / b == Rat(2));
    CHECK(a > b);
    CHECK(Rat(-1, 3) < b);
    CHECK_THROWS_AS(a / Rat(0), domain_error);
}

TEST_CASE("parsing integers, fractions, decimals, exponents") {
    CHECK(Rat::from_string("7") == Rat(7));
    CHECK(Rat::from_string("-3/4") == Rat(-3, 4));
    CHECK(Rat::from_string("2.5") == Rat(5, 2));
    CHECK(Rat::from_string("-0.125") == Rat(-1, 8));
    CHECK(Rat::from_string("1e-9") == Rat(Int(1), Int(1000000000)));
    CHECK(Rat::from_string("2.5e3") == Rat(2500));
    CHECK(Rat::from_string(".5") == Rat(1, 2));
    CHECK_THROWS_AS(Rat::from_string("1/0"), domain_error);
    CHECK_THROWS_AS(Rat::from_string("abc"), domain_error);
    CHECK_THROWS_AS(Rat::from_string(""), domain_error);
    CHECK_THROWS_AS(Rat::from_string("1.2.3"), domain_error);
}

TEST_CASE("floor, ceil, dyadic rounding directions") {
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).ceil() == -3);
    Rat x(1, 3);
    CHECK(x.round_down_pow2(8) <= x);
    CHECK(x.round_up_pow2(8) >= x);
    CHECK(x.round_up_pow2(8) - x.round_down_pow2(8) <= Rat(1, 128));
    Rat y(-1, 3);
    CHECK(y.round_down_pow2(8) <= y);
    CHECK(y.round_up_pow2(8) >= y);
}

TEST_CASE("perfect squares") {
    CHECK(Rat(9, 4).sqrt_exact() == Rat(3, 2));
    CHECK(Rat(0).sqrt_exact() == Rat(0));
    CHECK_FALSE(Rat(2).sqrt_exact().has_value());
    CHECK_FALSE(Rat(9, 8).sqrt_exact().has_value());
    CHECK_FALSE(Rat(-4).sqrt_exact().has_value());
}

TEST_CASE("decimal rendering is directed") {
    Rat third(1, 3);
    CHECK(decimal_string(third, 6, RoundDir::down) == "0.333333");
    CHECK(decimal_string(third, 6, RoundDir::up) == "0.333334");
    CHECK(decimal_string(Rat(-1, 3), 3, RoundDir::down) == "-0.334");
    CHECK(decimal_string(Rat(-1, 3), 3, RoundDir::up) == "-0.333");
    CHECK(decimal_string(Rat(5, 2), 0, RoundDir::down) == "2");
    CHECK(decimal_string(Rat(5, 2), 0, RoundDir::up) == "3");
}

TEST_CASE("rounding properties on random rationals") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) {
        Rat r(Int(static_cast<long>(rng() % 20001) - 10000),
              Int(static_cast<long>(rng() % 999) + 1));
        unsigned bits = static_cast<unsigned>(rng() % 40 + 1);
        Rat lo = r.round_down_pow2(bits), hi = r.round_up_pow2(bits);
        CHECK(lo <= r);
        CHECK(r <= hi);
        CHECK(hi - lo <= pow2(-static_cast<int>(bits)) * Rat(1));
        // decimal rendering honors its direction too
        Rat down = Rat::from_string(decimal_string(r, 4, RoundDir::down));
        Rat up = Rat::from_string(decimal_string(r, 4, RoundDir::up));
        CHECK(down <= r);
        CHECK(r <= up);
    }
}
