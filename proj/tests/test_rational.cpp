#include "doctest.h"

#include "gw/bigint.hpp"
#include "gw/prng.hpp"
#include "gw/rational.hpp"

#include <cstdint>

using namespace gw;

TEST_CASE("rationals normalize and compare exactly") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-2, 4) == Rat(1, -2));
    CHECK(Rat(0, 5) == Rat(0));
    CHECK(Rat(7, 9) < Rat(6, 7));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1) - Rat(6, 7) == Rat(1, 7));
    CHECK(Rat(3, 2) * Rat(2, 3) == Rat(1));
    CHECK(Rat(1, 7) / Rat(4) == Rat(1, 28));
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(7, 2).ceil() == 4);
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(Rat(5, 1).str() == "5");
    CHECK(Rat(10, 4).str() == "5/2");
    CHECK_THROWS_AS(Rat(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational accepts p/q, integers and decimals") {
    CHECK(parse_rational("2/3") == Rat(2, 3));
    CHECK(parse_rational("42") == Rat(42));
    CHECK(parse_rational("1.5") == Rat(3, 2));
    CHECK(parse_rational("1.01") == Rat(101, 100));
    CHECK(parse_rational("0.25") == Rat(1, 4));
    CHECK(parse_rational("-1.5") == Rat(-3, 2));
    CHECK(parse_rational("7/9") == Rat(7, 9));
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.2.3"), std::invalid_argument);
}

TEST_CASE("big unsigned arithmetic agrees with 128-bit reference") {
    SplitMix64 rng(555);
    for (int iter = 0; iter < 2000; ++iter) {
        const std::uint64_t a = rng.next() >> (rng.below(40));
        const std::uint64_t b = rng.next() >> (rng.below(40));
        const std::uint64_t m = 1 + (rng.next() >> (32 + rng.below(28)));
        unsigned __int128 ref = (unsigned __int128)a + b;
        BigUint x(a);
        x.add(BigUint(b));
        ref *= m;
        x.mul_u64(m);
        const std::uint64_t d = 1 + (rng.next() >> (32 + rng.below(28)));
        CHECK(x.mod_u64(d) == static_cast<std::uint64_t>(ref % d));
        const std::uint64_t rem = x.divmod_u64(d);
        CHECK(rem == static_cast<std::uint64_t>(ref % d));
        ref /= d;
        CHECK(x.mod_u64(1000000007ull) ==
              static_cast<std::uint64_t>(ref % 1000000007ull));
    }
}

TEST_CASE("big integers print in decimal") {
    BigUint v(1);
    for (int i = 0; i < 5; ++i) v.mul_u64(10000000000000000000ull);
    std::string s = v.str();
    CHECK(s == "1" + std::string(95, '0'));
    CHECK(BigUint(0).str() == "0");
    CHECK(BigUint(123456789).str() == "123456789");
}

TEST_CASE("big fractions accumulate exactly") {
    // harmonic-like sum with known closed form: sum 1/(i(i+1)) = n/(n+1)
    BigRat sum;
    const int n = 200;
    for (int i = 1; i <= n; ++i)
        sum.add_fraction(1, static_cast<std::uint64_t>(i) * (i + 1));
    CHECK(sum.str() == std::to_string(n) + "/" + std::to_string(n + 1));

    BigRat halves;
    halves.add_fraction(1, 2);
    halves.add_fraction(1, 2);
    CHECK(halves.str() == "1");
    CHECK(halves.to_double() == 1.0);

    // compare_products: 200/201 < 1, and 3/2 vs 6/4 equal
    CHECK(compare_products(sum.num(), {}, sum.den(), {1}) < 0);
    CHECK(compare_products(BigUint(3), {4}, BigUint(6), {2}) == 0);
}
