#include <doctest.h>

#include <random>

#include "euclid/interval.hpp"
#include "oracles.hpp"

using namespace euclid;

TEST_CASE("interval basics") {
    RatInterval a(Rat(1), Rat(2)), b(Rat(3), Rat(4));
    CHECK((a + b) == RatInterval(Rat(4), Rat(6)));
    CHECK((a - b) == RatInterval(Rat(-3), Rat(-1)));
    RatInterval sym(Rat(-1), Rat(1));
    CHECK((sym * sym) == RatInterval(Rat(-1), Rat(1)));
    CHECK_THROWS_AS(RatInterval(Rat(2), Rat(1)), domain_error);
    CHECK_THROWS_AS(a / sym, domain_error);
}

TEST_CASE("intersection of enclosures") {
    RatInterval a(Rat::from_string("1.41"), Rat::from_string("1.42"));
    RatInterval b(Rat::from_string("1.414"), Rat::from_string("1.50"));
    RatInterval c = intersect(a, b);
    CHECK(c.lo() == Rat::from_string("1.414"));
    CHECK(c.hi() == Rat::from_string("1.42"));
    RatInterval d(Rat(10), Rat(11));
    CHECK_THROWS_AS(intersect(a, d), internal_error);
}

TEST_CASE("sqrt enclosure: exact cases") {
    CHECK(sqrt_enclosure(Rat(4), Rat(1, 1000)) == RatInterval::point(Rat(2)));
    CHECK(sqrt_enclosure(Rat(0), Rat(1, 1000)) == RatInterval::point(Rat(0)));
    CHECK(sqrt_enclosure(Rat(9, 16), Rat(1)) == RatInterval::point(Rat(3, 4)));
    CHECK_THROWS_AS(sqrt_enclosure(Rat(-1), Rat(1)), domain_error);
    CHECK_THROWS_AS(sqrt_enclosure(Rat(2), Rat(0)), domain_error);
}

TEST_CASE("sqrt enclosure of 2 against the digit oracle") {
    Rat w(1, 1000000);
    RatInterval s = sqrt_enclosure(Rat(2), w);
    CHECK(s.width() <= w);
    RatInterval oracle = oracles::digit_sqrt(Rat(2), 12);
    CHECK(overlap(s, oracle));
    CHECK(s.lo() * s.lo() <= Rat(2));
    CHECK(s.hi() * s.hi() >= Rat(2));
}

namespace {

Rat random_rat(std::mt19937_64& rng, long num_range, long den_range) {
    long n = static_cast<long>(rng() % (2 * num_range + 1)) - num_range;
    long d = static_cast<long>(rng() % den_range) + 1;
    return Rat(Int(n), Int(d));
}

// A random interval guaranteed to contain the given value.
RatInterval interval_around(std::mt19937_64& rng, const Rat& v) {
    Rat pad1 = random_rat(rng, 50, 50).abs();
    Rat pad2 = random_rat(rng, 50, 50).abs();
    return {v - pad1, v + pad2};
}

} // namespace

TEST_CASE("enclosure soundness under random add/sub/mul/div") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        Rat x = random_rat(rng, 1000, 60), y = random_rat(rng, 1000, 60);
        RatInterval X = interval_around(rng, x), Y = interval_around(rng, y);
        CHECK((X + Y).contains(x + y));
        CHECK((X - Y).contains(x - y));
        CHECK((X * Y).contains(x * y));
        if (Y.certified_sign() != 0)
            CHECK((X / Y).contains(x / y));
        CHECK(intersect(X, interval_around(rng, x)).contains(x));
    }
}

TEST_CASE("sqrt enclosure: refinement is monotone and squares back") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 300; ++i) {
        Rat x = random_rat(rng, 5000, 500).abs();
        Rat w(1, 1 + static_cast<long>(rng() % 100000));
        RatInterval s1 = sqrt_enclosure(x, w);
        RatInterval s2 = sqrt_enclosure(x, w / Rat(2));
        CHECK(s1.width() <= w);
        CHECK(s2.width() <= s1.width());
        CHECK(s1.contains(s2)); // halving the width never widens
        CHECK((s1 * s1).contains(x));
        CHECK(s1.lo().sign() >= 0);
    }
}

TEST_CASE("outward rounding keeps the enclosure") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 300; ++i) {
        Rat x = random_rat(rng, 10000, 9999);
        RatInterval X = interval_around(rng, x);
        RatInterval r = X.outward_rounded(12);
        CHECK(r.contains(X));
        CHECK(r.width() <= X.width() + pow2(-11));
    }
}
