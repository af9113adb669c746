#include <catch_amalgamated.hpp>

#include <random>
#include <string>
#include <thread>

#include "circrep/pansiot.hpp"
#include "circrep/pansiot_cases.hpp"
#include "oracle.hpp"

using namespace circrep;

namespace {

// p by repeated string substitution from "1".
std::string naive_p(std::size_t n)
{
    std::string s = "1";
    while (s.size() < n) {
        std::string t;
        for (char c : s)
            t += c == '0' ? "101101" : "10";
        s = t;
    }
    return s.substr(0, n);
}

// M over strings: "abc", then repeat three back on 0, else the letter missing from the last three.
std::string naive_M(const std::string& w)
{
    std::string out = "abc";
    for (char c : w) {
        const std::size_t m = out.size();
        if (c == '0') {
            out += out[m - 3];
            continue;
        }
        for (char x : std::string("abcd"))
            if (x != out[m - 1] && x != out[m - 2] && x != out[m - 3]) {
                out += x;
                break;
            }
    }
    return out;
}

Word binary(const std::vector<Letter>& v) { return Word(v, 2); }

} // namespace

TEST_CASE("p is the fixed point of phi")
{
    CHECK(gen_p(8).str() == "10101101");
    const std::string ref = naive_p(5000);
    CHECK(gen_p(5000).str() == ref);
    CHECK(gen_p(1200).str() == ref.substr(0, 1200));
    CHECK(gen_p(0).empty());
}

TEST_CASE("stream prefixes are consistent across threads")
{
    const std::string ref = naive_p(20000);
    std::vector<std::thread> ts;
    std::vector<std::string> got(4);
    for (std::size_t t = 0; t < got.size(); ++t)
        ts.emplace_back([&, t] { got[t] = gen_p(5000 * (t + 1)).str(); });
    for (auto& t : ts)
        t.join();
    for (std::size_t t = 0; t < got.size(); ++t)
        CHECK(got[t] == ref.substr(0, 5000 * (t + 1)));
}

TEST_CASE("encoding M")
{
    CHECK(gen_P(3).str() == "abc");
    CHECK(encode_M(pansiot::t1()) == pansiot::T1());
    CHECK(encode_M(pansiot::t2()) == pansiot::T2());
    CHECK(encode_M(pansiot::t1()).str() == "abcdbacbdcabcd");
    CHECK(gen_P(3003).str() == naive_M(naive_p(3000)));
    CHECK(pansiot::T1().size() == pansiot::t1().size() + 3);
}

TEST_CASE("M round trip")
{
    const Word p = gen_p(500);
    CHECK(decode_M(encode_M(p)) == p);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 1000; ++t) {
        const Word w = binary(oracle::random_letters(rng, 1 + rng() % 60, 2));
        REQUIRE(decode_M(encode_M(w)) == w);
        REQUIRE(encode_M(w).str() == naive_M(w.str()));
    }
    CHECK_THROWS_AS(decode_M(letters_word("abd")), NotInImageOfM);
    CHECK_THROWS_AS(decode_M(letters_word("abcb")), NotInImageOfM);
}

TEST_CASE("properties of a prefix of P")
{
    const Word P = gen_P(10000);
    CHECK(is_beta_plus_free(P, thresholds::seven_fifths));
    CHECK_FALSE(is_beta_plus_free(P, thresholds::four_thirds));
    CHECK(is_gen_free(P.letters(), thresholds::fourteen_elevenths, 11));
    for (const auto& w : scan_high_powers(P, thresholds::four_thirds)) {
        REQUIRE(w.length == 14);
        REQUIRE(w.period == 10);
        REQUIRE(is_letter_permutation_of(P.letters().subspan(w.start, 14), pansiot::T1().letters()));
    }
    // Every length-15 factor contains at least three d's.
    for (std::size_t i = 0; i + 15 <= P.size(); ++i) {
        int d = 0;
        for (std::size_t j = i; j < i + 15; ++j)
            d += P[j] == ld;
        REQUIRE(d >= 3);
    }
}

TEST_CASE("t1 occurrences")
{
    const auto s = scan_t1(gen_p(10000));
    CHECK(s.occurrences.size() > 100);
    CHECK(s.overlapping_pairs > 0);
    CHECK(s.bad_overlaps == 0);
    CHECK(s.min_gap == 17);
}

TEST_CASE("mu cases")
{
    CHECK(check_mu_cases());
    CHECK(morphisms::mu(Word::parse("1", 2)).str() == "10101");
}

TEST_CASE("eta on T1 and T2")
{
    CHECK(eta(pansiot::T1()).word.str() == "abcdbacbdcabce");
    const auto e = eta(pansiot::T2());
    CHECK(is_beta_plus_free(e.word, thresholds::four_thirds));
    CHECK(e.erases_to_source());
    // d is the fourth letter of the first 7/5-power: one edit in its first four
    // letters and one in the last four letters of the second power.
    REQUIRE(e.edits.size() == 2);
    CHECK(e.edits[0] < 4);
    CHECK(e.edits[1] >= pansiot::T2().size() - 4);
    CHECK_THROWS_AS(eta(letters_word("abcb")), ProvenanceError);
    CHECK_THROWS_AS(eta(letters_word("aab")), ProvenanceError);
}

TEST_CASE("eta on factors of P")
{
    const Word P = gen_P(3000);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 400; ++t) {
        const std::size_t len = 1 + rng() % 200;
        const std::size_t s = rng() % (P.size() - len + 1);
        const auto e = eta(P.substr(s, len));
        REQUIRE(is_beta_plus_free(e.word, thresholds::four_thirds));
        REQUIRE(oracle::max_exponent(e.word.vec()).value <= thresholds::four_thirds);
        REQUIRE(eta_frequency_ok(e.word));
        REQUIRE(e.erases_to_source());
    }
}

TEST_CASE("bookend factors")
{
    const auto b = bookend_factor(4);
    CHECK(b.word.str() == "dbad");
    CHECK(b.start == 3);
    const Word P = gen_P(100000);
    for (std::size_t n = 3; n <= 500; ++n) {
        const auto f = bookend_factor(n);
        REQUIRE((f.word.size() == n || f.word.size() == n + 1));
        REQUIRE(f.word[0] == ld);
        REQUIRE(f.word[f.word.size() - 1] == ld);
        REQUIRE(P.substr(f.start, f.word.size()) == f.word);
    }
    CHECK_THROWS(bookend_factor(2));
}

TEST_CASE("case permutations")
{
    const Word x = letters_word("abcde", 5);
    CHECK(apply_permutation(x, perms::sigma()).str() == "bcaed");
    CHECK(apply_permutation(x, perms::tau()).str() == "cbaed");
    CHECK(apply_permutation(x, perms::pi()).str() == "adbce");
    CHECK(apply_permutation(x, perms::rho()).str() == "abced");
    CHECK(apply_permutation(apply_permutation(x, perms::rho()), perms::rho()) == x);
    CHECK(apply_permutation(apply_permutation(x, perms::tau()), perms::tau()) == x);
}

TEST_CASE("even construction")
{
    for (std::size_t n = 146; n <= 260; n += 2) {
        const auto b = build_even_detailed(n);
        REQUIRE(b.word.size() == n);
        REQUIRE(oracle::circular_beta_plus_free(b.word.vec(), thresholds::four_thirds));
    }
    for (CaseTag tag : {CaseTag::IIa, CaseTag::IIb1}) {
        std::size_t built = 0;
        for (std::size_t n = 146; n <= 300; n += 2) {
            try {
                const auto b = build_even_detailed(n, 0, tag);
                REQUIRE(b.descriptor.tag == tag);
                REQUIRE(oracle::circular_beta_plus_free(b.word.vec(), thresholds::four_thirds));
                ++built;
            } catch (const ConstructionError&) {
            }
        }
        CHECK(built > 20);
    }
    CHECK_THROWS_AS(build_even_detailed(145), std::invalid_argument);
}

TEST_CASE("odd construction")
{
    for (std::size_t n : {1291, 1293, 1333}) {
        const auto b = build_odd_detailed(n);
        REQUIRE(b.word.size() == n);
        REQUIRE(oracle::sampled_circular_free(b.word.vec(), thresholds::four_thirds, 150, n));
        Word back = b.word.substr(0, b.inserted_at) + b.word.substr(b.inserted_at + 1, n - b.inserted_at - 1);
        CHECK(back == b.even.word);
        CHECK(b.word[b.inserted_at] == le);
        CHECK((b.condition == 'a' || b.condition == 'b' || b.condition == 'c'));
    }
}
