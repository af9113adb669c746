#include <catch_amalgamated.hpp>

#include <vector>

#include "circrep/search.hpp"
#include "oracle.hpp"

using namespace circrep;

namespace {

SearchConfig config(unsigned k, Ratio beta, std::size_t n, SearchMode mode = SearchMode::exhaustive)
{
    SearchConfig c;
    c.k = k;
    c.beta = beta;
    c.n = n;
    c.mode = mode;
    return c;
}

// Generate-and-test over all k^n words.
std::uint64_t naive_count(unsigned k, const Ratio& beta, std::size_t n)
{
    std::vector<Letter> w(n, 0);
    std::uint64_t count = 0;
    while (true) {
        count += oracle::circular_beta_plus_free(w, beta);
        std::size_t i = 0;
        while (i < n && w[i] == k - 1)
            w[i++] = 0;
        if (i == n)
            break;
        ++w[i];
    }
    return count;
}

} // namespace

TEST_CASE("small searches")
{
    const Ratio b = thresholds::seven_fourths;
    CHECK(search_circular(config(3, b, 5)).verdict == Verdict::proven_absent);
    const auto r6 = search_circular(config(3, b, 6));
    REQUIRE(r6.verdict == Verdict::found);
    CHECK(oracle::circular_beta_plus_free(r6.word->vec(), b));
    const auto r1 = search_circular(config(4, thresholds::three_halves, 1));
    REQUIRE(r1.word);
    CHECK(r1.word->str() == "0");
    CHECK_THROWS(search_circular(config(3, b, 0)));
    CHECK_THROWS(search_circular(config(7, b, 3)));
}

TEST_CASE("ternary exceptional lengths")
{
    const auto rep = prove_ternary_exceptions(22);
    CHECK(rep.absent == std::vector<std::size_t>{5, 7, 9, 10, 14, 16, 17, 22});
    CHECK(rep.present.size() == 14);
    CHECK(rep.matches_expected);
    CHECK(rep.nodes > 0);
}

TEST_CASE("pruned search agrees with generate-and-test")
{
    const Ratio b = thresholds::seven_fourths;
    for (std::size_t n = 1; n <= 12; ++n) {
        const auto naive = naive_count(3, b, n);
        REQUIRE(count_circular(3, b, n, false) == naive);
        // Renaming letters maps solutions starting with x onto solutions starting with 0.
        REQUIRE(count_circular(3, b, n, true) * 3 == naive);
        REQUIRE((search_circular(config(3, b, n)).verdict == Verdict::found) == (naive > 0));
    }
    for (std::size_t n = 1; n <= 8; ++n)
        REQUIRE(count_circular(4, thresholds::three_halves, n, false) ==
                naive_count(4, thresholds::three_halves, n));
}

TEST_CASE("seam check")
{
    const Ratio b = thresholds::seven_fourths;
    std::vector<Letter> w{0, 1, 2, 0};
    CHECK_FALSE(detail::seam_ok(w, 4, b));
    CHECK(w.size() == 4);
    std::vector<Letter> v{0, 1, 2};
    CHECK(detail::seam_ok(v, 3, b));
    // 010201 is linearly fine but ...0101... wraps.
    std::vector<Letter> u{0, 1, 0, 2, 0, 1};
    CHECK_FALSE(detail::seam_ok(u, 6, thresholds::three_halves));
}

TEST_CASE("randomized search")
{
    auto c = config(5, thresholds::four_thirds, 300, SearchMode::randomized);
    const auto a = search_circular(c);
    const auto b = search_circular(c);
    REQUIRE(a.word);
    CHECK(a.word == b.word);
    CHECK(a.seed == default_seed);
    CHECK(oracle::circular_beta_plus_free(a.word->vec(), thresholds::four_thirds));
    c.seed = 1;
    const auto other = search_circular(c);
    REQUIRE(other.word);
    CHECK(other.seed == 1);

    auto big = config(4, thresholds::three_halves, 5000, SearchMode::randomized);
    big.node_budget = 4096;
    const auto r = search_circular(big);
    CHECK(r.verdict == Verdict::budget_exhausted);
    CHECK_FALSE(r.word);
}

TEST_CASE("found words pass the oracle")
{
    for (std::size_t n = 23; n <= 80; ++n) {
        const auto r = search_circular(config(3, thresholds::seven_fourths, n, SearchMode::randomized));
        REQUIRE(r.word);
        REQUIRE(r.word->size() == n);
        REQUIRE(oracle::circular_beta_plus_free(r.word->vec(), thresholds::seven_fourths));
    }
}
