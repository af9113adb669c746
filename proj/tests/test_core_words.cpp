#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "circrep/exponent.hpp"
#include "circrep/ratio.hpp"
#include "circrep/word.hpp"
#include "oracle.hpp"

using namespace circrep;

namespace {

Word W(std::string_view s, unsigned k = 0) { return Word::parse(s, k); }

const Word T1 = Word::parse("abcdbacbdcabcd");

} // namespace

TEST_CASE("ratio arithmetic is exact")
{
    CHECK(Ratio(6, 4) == Ratio(3, 2));
    CHECK(Ratio(7, 5) > Ratio(4, 3));
    CHECK(Ratio(14, 11) < Ratio(4, 3));
    CHECK(Ratio::parse("14/11") == thresholds::fourteen_elevenths);
    CHECK(Ratio::parse("2") == Ratio(2, 1));
    CHECK_THROWS(Ratio::parse("1.5"));
    CHECK_THROWS(Ratio::parse("3/"));
    CHECK_THROWS(Ratio(1, 0));
    CHECK(Ratio(3, 2).exceeded_by(4, 2));
    CHECK_FALSE(Ratio(3, 2).exceeded_by(3, 2));
    CHECK(Ratio(3, 2).reached_by(3, 2));
}

TEST_CASE("word parsing and rendering")
{
    CHECK(W("0121").str() == "0121");
    CHECK(W("abce").alphabet_size() == 5);
    CHECK(W("abce").str() == "abce");
    CHECK_THROWS(W("ab01"));
    CHECK_THROWS(W("012", 2));
    CHECK(W("").empty());
}

TEST_CASE("minimal period and exponent")
{
    const Word alfalfa({0, 1, 2, 0, 1, 2, 0}, 3);
    CHECK(minimal_period(alfalfa) == 3);
    CHECK(exponent(alfalfa) == Ratio(7, 3));
    CHECK(minimal_period(W("abcd")) == 4);
    CHECK(minimal_period(W("1211")) == 3);
    CHECK(exponent(W("1211")) == Ratio(4, 3));
    CHECK(exponent(W("aa")) == Ratio(2, 1));
    CHECK_THROWS_AS(minimal_period(W("")), std::domain_error);
    CHECK_THROWS_AS(exponent(W("")), std::domain_error);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        auto v = oracle::random_letters(rng, 1 + rng() % 30, 2 + rng() % 2);
        CHECK(minimal_period(std::span<const Letter>(v)) == oracle::naive_minimal_period(v));
    }
}

TEST_CASE("max exponent and witnesses")
{
    // "0121" contains 121 (period 2), so the maximum is 3/2, not the 4/3 of the whole word.
    auto m = max_exponent(W("0121"));
    CHECK(m.value == Ratio(3, 2));
    CHECK(m.witness.start == 1);
    CHECK(m.witness.period == 2);
    CHECK(m.witness.length == 3);

    CHECK(max_exponent(W("ab")).value == Ratio(1, 1));

    auto t = max_exponent(T1);
    CHECK(t.value == Ratio(7, 5));
    CHECK(t.witness.period == 10);
    CHECK(t.witness.excess() == 4);

    CHECK_THROWS_AS(max_exponent(W("")), std::domain_error);
}

TEST_CASE("freeness predicates")
{
    CHECK(is_beta_plus_free(W("abcd"), thresholds::three_halves));
    CHECK(is_beta_plus_free(T1, thresholds::seven_fifths));
    CHECK_FALSE(is_beta_plus_free(T1, thresholds::four_thirds));
    CHECK_FALSE(is_beta_free(W("aa"), Ratio(2, 1)));
    CHECK(is_beta_free(W("aba"), Ratio(2, 1)));
    const Word alfalfa({0, 1, 2, 0, 1, 2, 0}, 3);
    CHECK_FALSE(is_beta_free(alfalfa, Ratio(7, 3)));
    CHECK(is_gen_free(W("aa"), Ratio(2, 1), 1));
    CHECK_FALSE(is_gen_free(W("aaa"), Ratio(3, 2), 1));
    // 7/5-power of period 10 is excluded at p_min 10 and 11 tolerates it.
    CHECK_FALSE(is_gen_free(T1, Ratio(14, 11), 10));
    CHECK(is_gen_free(T1, Ratio(14, 11), 11));
}

TEST_CASE("suffix_power_above agrees with prefix-wise scan")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
        auto v = oracle::random_letters(rng, 1 + rng() % 25, 2 + rng() % 3);
        for (Ratio beta : {Ratio(3, 2), Ratio(7, 4), Ratio(4, 3), Ratio(2, 1)}) {
            bool prev_free = true;
            for (std::size_t len = 1; len <= v.size(); ++len) {
                std::span<const Letter> pre(v.data(), len);
                const bool free_now = is_beta_plus_free(pre, beta);
                if (prev_free)
                    REQUIRE(suffix_power_above(pre, beta) == !free_now);
                prev_free = free_now;
            }
        }
    }
}

TEST_CASE("fast max exponent matches the oracle on all short ternary words")
{
    for (std::size_t n = 1; n <= 9; ++n) {
        std::vector<Letter> v(n, 0);
        while (true) {
            auto fast = max_exponent(std::span<const Letter>(v));
            auto slow = oracle::max_exponent(v);
            REQUIRE(fast.value == slow.value);
            REQUIRE(fast.witness.start == slow.start);
            REQUIRE(fast.witness.period == slow.period);
            REQUIRE(fast.value == oracle::cubic_max_exponent(v));
            std::size_t i = 0;
            while (i < n && v[i] == 2)
                v[i++] = 0;
            if (i == n)
                break;
            ++v[i];
        }
    }
}

TEST_CASE("circular max exponent")
{
    CHECK(circular_max_exponent(CircularWord(W("0123"))).value == Ratio(1, 1));
    CHECK(is_circular_beta_plus_free(CircularWord(W("0123")), thresholds::three_halves));
    auto m = circular_max_exponent(CircularWord(W("0101")));
    CHECK(m.value == Ratio(2, 1));
    CHECK(m.witness.period == 2);
    // (010) contains the factor 00 of a conjugate.
    CHECK(circular_max_exponent(CircularWord(W("010"))).value == Ratio(2, 1));
    CHECK(circular_max_exponent(CircularWord(W("aaa"))).value == Ratio(3, 1));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 3000; ++t) {
        auto v = oracle::random_letters(rng, 1 + rng() % 20, 2 + rng() % 3);
        auto fast = circular_max_exponent(std::span<const Letter>(v));
        auto slow = oracle::circular_max_exponent(v);
        REQUIRE(fast.value == slow.value);
        REQUIRE(fast.witness.start == slow.start);
        REQUIRE(fast.witness.period == slow.period);
        for (Ratio beta : {Ratio(3, 2), Ratio(7, 4), Ratio(4, 3)})
            REQUIRE(is_circular_beta_plus_free(std::span<const Letter>(v), beta) == (slow.value <= beta));
    }
}

TEST_CASE("circular freeness is rotation invariant and implies linear freeness")
{
    for (std::size_t n = 1; n <= 12; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            std::vector<Letter> v(n);
            for (std::size_t i = 0; i < n; ++i)
                v[i] = (mask >> i) & 1;
            const Word w(v, 2);
            const auto circ = circular_max_exponent(w.letters()).value;
            const auto rot = circular_max_exponent(rotate(w, 1 + mask % n).letters()).value;
            REQUIRE(circ == rot);
            for (const auto& c : CircularWord(w).conjugates())
                REQUIRE(max_exponent(c).value <= circ);
        }
    }
}

TEST_CASE("rotation, canonical form and least rotation")
{
    CHECK(CircularWord(W("ba")).canonical() == W("ab"));
    CHECK(CircularWord(W("aaa")).canonical() == W("aaa"));
    CHECK(CircularWord(W("120")).canonical() == W("012"));
    CHECK(CircularWord(W("0121")) == CircularWord(W("1210")));
    CHECK(CircularWord(W("abc")).conjugates().size() == 3);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 2000; ++t) {
        const Word w(oracle::random_letters(rng, 1 + rng() % 15, 2 + rng() % 2), 3);
        Word best = w;
        for (std::size_t r = 1; r < w.size(); ++r)
            best = std::min(best, rotate(w, r));
        REQUIRE(CircularWord(w).canonical() == best);
    }
}

TEST_CASE("permutations, reversal and slicing")
{
    const auto sigma = Permutation::from_cycles("(a b c)(d e)", 5);
    // a->b, d->e, e->d
    CHECK(apply_permutation(W("ade", 5), sigma).str() == "bed");
    CHECK(reverse(W("abc")).str() == "cba");
    CHECK(W("abcde").slice(2, -2).str() == "bcd");
    CHECK(W("abcde").at(-1) == 4);
    CHECK(W("abcde").at(1) == 0);
    CHECK_THROWS(W("abc").slice(0, 2));
    CHECK_THROWS(W("abc").at(4));

    const auto tau = Permutation::from_cycles("(ac)(de)", 5);
    const auto rho = Permutation::from_cycles("(de)", 5);
    const auto pi = Permutation::from_cycles("(bdc)", 5);
    CHECK((tau * tau).is_identity());
    CHECK((rho * rho).is_identity());
    CHECK((pi * pi * pi).is_identity());
    CHECK_FALSE((pi * pi).is_identity());
    CHECK((sigma * sigma * sigma * sigma * sigma * sigma).is_identity());
    CHECK(sigma.inverse() * sigma == Permutation::identity(5));

    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        const Word w(oracle::random_letters(rng, 1 + rng() % 40, 5), 5);
        const auto m = max_exponent(w).value;
        REQUIRE(max_exponent(reverse(w)).value == m);
        REQUIRE(max_exponent(apply_permutation(w, sigma)).value == m);
    }
}
