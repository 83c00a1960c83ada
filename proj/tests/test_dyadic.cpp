#include <doctest.h>

#include <random>
#include <vector>

#include "chocolate/dyadic.hpp"
#include "chocolate/errors.hpp"
#include "chocolate/hackenbush.hpp"

using namespace chocolate;

namespace {

Dyadic d(std::int64_t p, std::uint32_t j) { return Dyadic::make(p, j); }

// Exhaustive check that nothing simpler than r lies strictly in (lo, hi).
bool nothing_simpler(Dyadic lo, Dyadic hi, Dyadic r) {
    for (std::int64_t k = lo.floor(); k <= hi.ceil(); ++k) {
        const Dyadic cand{k};
        if (lo < cand && cand < hi) {
            if (!r.is_integer()) return false;
            if (std::llabs(k) < std::llabs(r.numerator())) return false;
        }
    }
    for (std::uint32_t j = 1; j < r.exponent(); ++j) {
        const std::int64_t from = lo.floor() << j;
        const std::int64_t to = hi.ceil() << j;
        for (std::int64_t p = from; p <= to; ++p) {
            const Dyadic cand = d(p, j);
            if (lo < cand && cand < hi) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("make normalizes") {
    CHECK(d(0, 5).numerator() == 0);
    CHECK(d(0, 5).exponent() == 0);
    CHECK(d(6, 3) == d(3, 2));
    CHECK(d(6, 3).numerator() == 3);
    CHECK(d(6, 3).exponent() == 2);
    CHECK(d(11, 4).numerator() == 11);
    CHECK(d(11, 4).exponent() == 4);
    CHECK(d(-12, 2) == Dyadic{-3});
}

TEST_CASE("normalization is idempotent") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<std::uint32_t> exp(0, 40);
    for (int i = 0; i < 1000; ++i) {
        const Dyadic a = d(num(rng), exp(rng));
        CHECK(d(a.numerator(), a.exponent()) == a);
        CHECK((a.exponent() == 0 || a.numerator() % 2 != 0));
    }
}

TEST_CASE("exact sum from the four-bar endgame") {
    Dyadic total = d(-21, 5);
    total = add(total, d(-1, 1));
    total = add(total, d(11, 4));
    total = add(total, d(1, 1));
    CHECK(total == d(1, 5));
}

TEST_CASE("additive inverse and ordering") {
    const Dyadic a = d(-43, 6);
    CHECK(add(a, neg(a)) == Dyadic{0});
    CHECK(cmp(d(5, 3), d(11, 4)) == std::strong_ordering::less);
    CHECK(d(11, 4) > d(21, 5));
    CHECK(d(-1, 1) < Dyadic{0});
}

TEST_CASE("add is associative and commutative") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> num(-(1 << 20), 1 << 20);
    std::uniform_int_distribution<std::uint32_t> exp(0, 30);
    for (int i = 0; i < 1000; ++i) {
        const Dyadic a = d(num(rng), exp(rng));
        const Dyadic b = d(num(rng), exp(rng));
        const Dyadic c = d(num(rng), exp(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
    }
}

TEST_CASE("overflow is reported, not wrapped") {
    const Dyadic big{std::numeric_limits<std::int64_t>::max()};
    CHECK_THROWS_AS(big + Dyadic{1}, OverflowError);
    CHECK_THROWS_AS(-Dyadic{std::numeric_limits<std::int64_t>::min()}, OverflowError);
    CHECK_THROWS_AS(Dyadic::make(1, 63), OverflowError);
    CHECK(Dyadic::make(2, 63) == Dyadic::make(1, 62));
    // Sums needing more than the exponent range still fail loudly.
    CHECK_THROWS_AS(Dyadic::parse("99999999999999999999"), OverflowError);
}

TEST_CASE("text format") {
    CHECK(d(11, 4).to_string() == "11/2^4");
    CHECK(d(-1, 1).to_string() == "-1/2^1");
    CHECK(Dyadic{0}.to_string() == "0");
    CHECK(Dyadic{-3}.to_string() == "-3");
    CHECK(Dyadic::parse("+6/2^3") == d(3, 2));
    CHECK(Dyadic::parse("-21/2^5") == d(-21, 5));
    CHECK_THROWS_AS(Dyadic::parse("1/3"), ParseError);
    CHECK_THROWS_AS(Dyadic::parse("abc"), ParseError);
    CHECK_THROWS_AS(Dyadic::parse("1/2^"), ParseError);
    CHECK_THROWS_AS(Dyadic::parse("1/2^3x"), ParseError);

    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> num(std::numeric_limits<std::int64_t>::min() / 2,
                                                    std::numeric_limits<std::int64_t>::max() / 2);
    std::uniform_int_distribution<std::uint32_t> exp(0, Dyadic::kMaxExponent);
    for (int i = 0; i < 500; ++i) {
        const Dyadic a = d(num(rng), exp(rng));
        CHECK(Dyadic::parse(a.to_string()) == a);
    }
}

TEST_CASE("floor and ceil") {
    CHECK(d(-3, 1).floor() == -2);
    CHECK(d(-3, 1).ceil() == -1);
    CHECK(d(3, 1).floor() == 1);
    CHECK(d(3, 1).ceil() == 2);
    CHECK(Dyadic{-4}.floor() == -4);
}

TEST_CASE("simplest_between examples") {
    CHECK(simplest_between(std::nullopt, std::nullopt) == Dyadic{0});
    CHECK(simplest_between(d(1, 1), d(3, 2)) == d(5, 3));
    CHECK(simplest_between(d(5, 3), d(3, 2)) == d(11, 4));
    CHECK(simplest_between(d(1, 1), d(43, 6)) == d(5, 3));
    CHECK(simplest_between(std::nullopt, Dyadic{1}) == Dyadic{0});
}

TEST_CASE("simplest_between one-sided and integer cases") {
    CHECK(simplest_between(Dyadic{0}, std::nullopt) == Dyadic{1});
    CHECK(simplest_between(Dyadic{2}, std::nullopt) == Dyadic{3});
    CHECK(simplest_between(d(-5, 1), std::nullopt) == Dyadic{0});
    CHECK(simplest_between(std::nullopt, Dyadic{0}) == Dyadic{-1});
    CHECK(simplest_between(std::nullopt, d(-5, 1)) == Dyadic{-3});
    CHECK(simplest_between(Dyadic{-3}, Dyadic{5}) == Dyadic{0});
    CHECK(simplest_between(d(3, 1), Dyadic{7}) == Dyadic{2});
    CHECK(simplest_between(Dyadic{-7}, d(-3, 1)) == Dyadic{-2});
    CHECK(simplest_between(Dyadic{0}, Dyadic{1}) == d(1, 1));
    CHECK(simplest_between(Dyadic{-1}, Dyadic{0}) == d(-1, 1));
    CHECK(simplest_between(d(-1, 1), d(-1, 2)) == d(-3, 3));
}

TEST_CASE("simplest_between rejects inverted bounds") {
    CHECK_THROWS_AS(simplest_between(Dyadic{1}, Dyadic{1}), BoundsViolation);
    CHECK_THROWS_AS(simplest_between(d(3, 2), d(1, 1)), BoundsViolation);
}

TEST_CASE("simplest_between is strictly inside and minimal over Hackenbush bounds") {
    std::vector<Dyadic> hs;
    for (std::uint32_t n = 0; n <= 12; ++n) hs.push_back(hackenbush_value(n));
    for (const Dyadic& lo : hs) {
        for (const Dyadic& hi : hs) {
            if (!(lo < hi)) continue;
            const Dyadic r = simplest_between(lo, hi);
            CAPTURE(lo);
            CAPTURE(hi);
            CHECK(lo < r);
            CHECK(r < hi);
            CHECK(nothing_simpler(lo, hi, r));
        }
    }
}

TEST_CASE("simplest_between reports exhausted precision") {
    const Dyadic lo = Dyadic::make(1, 62);
    const Dyadic hi = Dyadic::make(1, 61);
    CHECK_THROWS_AS(simplest_between(lo, hi), OverflowError);
}
