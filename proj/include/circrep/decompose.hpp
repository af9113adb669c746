#pragma once

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>

namespace circrep {

/// n = r·a + s·b with 0 <= s < a.
struct Decomposition {
    std::size_t r = 0;
    std::size_t s = 0;
    std::size_t a = 0;
    std::size_t b = 0;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct NoDecomposition : std::domain_error {
    using std::domain_error::domain_error;
};

/// The unique (r, s) with s < a and n = ra + sb. Every n >= (a-1)(b-1) has
/// one; smaller n are accepted when a representation happens to exist.
inline Decomposition decompose(std::size_t n, std::size_t a, std::size_t b)
{
    if (a == 0 || b == 0 || std::gcd(a, b) != 1)
        throw std::domain_error("decompose: block lengths must be coprime and positive");
    for (std::size_t s = 0; s < a && s * b <= n; ++s)
        if ((n - s * b) % a == 0)
            return Decomposition{(n - s * b) / a, s, a, b};
    throw NoDecomposition("decompose: " + std::to_string(n) + " is not of the form " + std::to_string(a) +
                          "r + " + std::to_string(b) + "s");
}

/// Number of pairs (r, s) with s < a and n = ra + sb.
inline std::size_t count_decompositions(std::size_t n, std::size_t a, std::size_t b)
{
    std::size_t count = 0;
    for (std::size_t s = 0; s < a; ++s)
        for (std::size_t r = 0; r * a + s * b <= n; ++r)
            if (r * a + s * b == n)
                ++count;
    return count;
}

} // namespace circrep
