#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace circrep {

/// Exact non-negative rational number. Always stored in lowest terms.
///
/// Comparisons cross-multiply in 128-bit arithmetic, so thresholds such as
/// 7/5 versus 7/5⁺ are decided exactly.
class Ratio {
public:
    constexpr Ratio() = default;

    constexpr Ratio(std::uint64_t num, std::uint64_t den) : num_(num), den_(den)
    {
        if (den == 0)
            throw std::domain_error("Ratio: zero denominator");
        const std::uint64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    constexpr std::uint64_t num() const noexcept { return num_; }
    constexpr std::uint64_t den() const noexcept { return den_; }

    friend constexpr bool operator==(const Ratio& a, const Ratio& b) noexcept
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend constexpr std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept
    {
        const auto lhs = static_cast<unsigned __int128>(a.num_) * b.den_;
        const auto rhs = static_cast<unsigned __int128>(b.num_) * a.den_;
        if (lhs < rhs)
            return std::strong_ordering::less;
        if (lhs > rhs)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// True iff length/period > *this, without constructing the ratio.
    constexpr bool exceeded_by(std::uint64_t length, std::uint64_t period) const noexcept
    {
        return static_cast<unsigned __int128>(length) * den_ >
               static_cast<unsigned __int128>(num_) * period;
    }

    /// True iff length/period >= *this.
    constexpr bool reached_by(std::uint64_t length, std::uint64_t period) const noexcept
    {
        return static_cast<unsigned __int128>(length) * den_ >=
               static_cast<unsigned __int128>(num_) * period;
    }

    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

    /// Parses "num/den" or a bare integer. Decimal notation is rejected.
    static Ratio parse(std::string_view text)
    {
        auto parse_uint = [&](std::string_view s) {
            if (s.empty() || s.size() > 18)
                throw std::invalid_argument("Ratio: malformed number in '" + std::string(text) + "'");
            std::uint64_t v = 0;
            for (char c : s) {
                if (c < '0' || c > '9')
                    throw std::invalid_argument("Ratio: expected num/den, got '" + std::string(text) + "'");
                v = v * 10 + static_cast<std::uint64_t>(c - '0');
            }
            return v;
        };
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Ratio(parse_uint(text), 1);
        return Ratio(parse_uint(text.substr(0, slash)), parse_uint(text.substr(slash + 1)));
    }

    friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 1;
};

namespace thresholds {
inline constexpr Ratio three_halves{3, 2};
inline constexpr Ratio seven_fourths{7, 4};
inline constexpr Ratio four_thirds{4, 3};
inline constexpr Ratio seven_fifths{7, 5};
inline constexpr Ratio fourteen_elevenths{14, 11};
} // namespace thresholds

} // namespace circrep
