#include <catch_amalgamated.hpp>

#include "circrep/decompose.hpp"

using namespace circrep;

TEST_CASE("decompose")
{
    CHECK(decompose(80, 9, 11) == Decomposition{4, 4, 9, 11});
    CHECK(decompose(100, 9, 11) == Decomposition{5, 5, 9, 11});
    CHECK(decompose(63, 9, 11) == Decomposition{7, 0, 9, 11});
    CHECK(decompose(396, 19, 23) == Decomposition{16, 4, 19, 23});
    // 395 = 19·23 - 19 - 23 has no representation at all.
    CHECK_THROWS_AS(decompose(395, 19, 23), NoDecomposition);
    CHECK_THROWS_AS(decompose(10, 9, 11), NoDecomposition);
    CHECK_THROWS_AS(decompose(100, 6, 9), std::domain_error);
}

TEST_CASE("representation is unique above the Frobenius bound")
{
    for (auto [a, b] : {std::pair<std::size_t, std::size_t>{9, 11}, {19, 23}}) {
        const std::size_t lo = (a - 1) * (b - 1);
        for (std::size_t n = lo; n <= lo + 500; ++n) {
            REQUIRE(count_decompositions(n, a, b) == 1);
            const auto d = decompose(n, a, b);
            REQUIRE(d.r * a + d.s * b == n);
            REQUIRE(d.s < a);
        }
        // The largest non-representable number is ab - a - b = lo - 1.
        CHECK(count_decompositions(lo - 1, a, b) == 0);
    }
}
