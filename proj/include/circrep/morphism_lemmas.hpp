#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "circrep/cuts.hpp"
#include "circrep/exponent.hpp"
#include "circrep/morphism.hpp"
#include "circrep/ratio.hpp"

namespace circrep {

struct Claim {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ClaimReport {
    std::string subject;
    std::vector<Claim> claims;

    bool all_pass() const
    {
        for (const auto& c : claims)
            if (!c.pass)
                return false;
        return true;
    }
};

/// Lengths that the bullet-list code properties of a family refer to.
struct CodeProfile {
    std::size_t prefix_len;    // length-P prefixes of blocks are pairwise distinct
    std::size_t suffix_len;    // length-S suffixes are pairwise distinct
    std::size_t shared_prefix; // images of one letter share this much prefix
    std::size_t shared_suffix; // ... and this much suffix
};

inline CodeProfile code_profile(const MorphismFamily& fam)
{
    if (fam.name() == "F")
        return {9, 3, 8, 2};
    if (fam.name() == "D")
        return {10, 14, 9, 13};
    return {fam.min_block(), fam.min_block(), 0, 0};
}

namespace detail {

inline std::vector<Letter> head(const Word& w, std::size_t m)
{
    m = std::min(m, w.size());
    return {w.vec().begin(), w.vec().begin() + static_cast<long>(m)};
}

inline std::vector<Letter> tail(const Word& w, std::size_t m)
{
    m = std::min(m, w.size());
    return {w.vec().end() - static_cast<long>(m), w.vec().end()};
}

template <class Key>
bool all_distinct(const std::vector<MorphismFamily::Block>& blocks, Key key)
{
    std::set<std::vector<Letter>> seen;
    for (const auto& b : blocks)
        if (!seen.insert(key(b.word)).second)
            return false;
    return true;
}

/// No block is a prefix (suffix when `reversed`) of a different block.
inline bool affix_code(const std::vector<MorphismFamily::Block>& blocks, bool reversed)
{
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (i == j)
                continue;
            const auto& a = blocks[i].word;
            const auto& b = blocks[j].word;
            if (a.size() > b.size())
                continue;
            const auto part = reversed ? tail(b, a.size()) : head(b, a.size());
            if (part == a.vec())
                return false;
        }
    return true;
}

} // namespace detail

inline ClaimReport verify_code_properties(const MorphismFamily& fam, std::optional<CodeProfile> profile = {})
{
    const CodeProfile pr = profile.value_or(code_profile(fam));
    const auto blocks = fam.building_blocks();
    ClaimReport rep{fam.name(), {}};
    auto add = [&](std::string name, bool ok) { rep.claims.push_back(Claim{std::move(name), ok, {}}); };

    add("prefix code", detail::affix_code(blocks, false));
    add("distinct length-" + std::to_string(pr.prefix_len) + " prefixes",
        detail::all_distinct(blocks, [&](const Word& w) { return detail::head(w, pr.prefix_len); }));
    add("suffix code", detail::affix_code(blocks, true));
    add("distinct length-" + std::to_string(pr.suffix_len) + " suffixes",
        detail::all_distinct(blocks, [&](const Word& w) { return detail::tail(w, pr.suffix_len); }));

    bool shared_pre = true, shared_suf = true, bookends = true;
    for (unsigned a = 0; a < fam.source_alphabet(); ++a) {
        const auto& first = fam.member(0).image(static_cast<Letter>(a));
        for (const auto& m : fam.members()) {
            const auto& img = m.image(static_cast<Letter>(a));
            shared_pre = shared_pre && detail::head(img, pr.shared_prefix) == detail::head(first, pr.shared_prefix);
            shared_suf = shared_suf && detail::tail(img, pr.shared_suffix) == detail::tail(first, pr.shared_suffix);
            bookends = bookends && img.vec().front() == a && img.vec().back() == a;
        }
    }
    add("shared length-" + std::to_string(pr.shared_prefix) + " prefix per letter", shared_pre);
    add("shared length-" + std::to_string(pr.shared_suffix) + " suffix per letter", shared_suf);
    add("blocks begin and end with their source letter", bookends);
    return rep;
}

/// Calls f on every beta⁺-free word over k letters of length exactly len.
/// f returns false to stop the enumeration; the function then returns false.
inline bool for_each_free_word(unsigned k, const Ratio& beta, std::size_t len,
                               const std::function<bool(const std::vector<Letter>&)>& f)
{
    std::vector<Letter> w;
    w.reserve(len);
    auto rec = [&](auto&& self) -> bool {
        if (w.size() == len)
            return f(w);
        for (unsigned a = 0; a < k; ++a) {
            w.push_back(static_cast<Letter>(a));
            const bool ok = suffix_power_above(w, beta) || self(self);
            w.pop_back();
            if (!ok)
                return false;
        }
        return true;
    };
    return rec(rec);
}

/// Every factor of length >= L of every mixed image of every two-letter word has a cut.
inline bool check_cut_threshold(const MorphismFamily& fam, std::size_t L, Word* counterexample = nullptr)
{
    std::set<std::vector<Letter>> done;
    const unsigned k = fam.source_alphabet();
    const std::size_t members = fam.members().size();
    for (unsigned a1 = 0; a1 < k; ++a1)
        for (unsigned a2 = 0; a2 < k; ++a2)
            for (std::size_t m1 = 0; m1 < members; ++m1)
                for (std::size_t m2 = 0; m2 < members; ++m2) {
                    const Word src({static_cast<Letter>(a1), static_cast<Letter>(a2)}, k);
                    const std::size_t sel[2] = {m1, m2};
                    const Word img = fam.mixed_image(src, sel);
                    for (std::size_t len = L; len <= img.size(); ++len)
                        for (std::size_t s = 0; s + len <= img.size(); ++s) {
                            Word u = img.substr(s, len);
                            if (!done.insert(u.vec()).second)
                                continue;
                            if (find_cuts(u, fam).empty()) {
                                if (counterexample)
                                    *counterexample = u;
                                return false;
                            }
                        }
                }
    return true;
}

/// For every beta⁺-free w with |w| <= test_len, m(w) is beta⁺-free.
inline bool check_freeness_preservation(const UniformMorphism& m, const Ratio& beta, std::size_t test_len,
                                        Word* counterexample = nullptr)
{
    const unsigned k = m.source_alphabet();
    std::vector<Letter> src, img;
    bool ok = true;
    auto rec = [&](auto&& self) -> void {
        if (!ok || src.size() == test_len)
            return;
        for (unsigned a = 0; a < k && ok; ++a) {
            src.push_back(static_cast<Letter>(a));
            if (!suffix_power_above(src, beta)) {
                const std::size_t before = img.size();
                bool bad = false;
                for (Letter x : m.image(static_cast<Letter>(a)).letters()) {
                    img.push_back(x);
                    if (!bad && suffix_power_above(img, beta))
                        bad = true;
                }
                if (bad) {
                    ok = false;
                    if (counterexample)
                        *counterexample = Word(src, k);
                } else {
                    self(self);
                }
                img.resize(before);
            }
            src.pop_back();
        }
    };
    rec(rec);
    return ok;
}

/// A word has a factor xyx exceeding beta with |x| <= max_x.
inline bool has_short_power_above(std::span<const Letter> w, const Ratio& beta, std::size_t max_x)
{
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        const std::size_t need = static_cast<std::size_t>(beta.num() * p / beta.den()) + 1;
        const std::size_t x = need - p;
        if (x > max_x || need > n)
            break;
        std::size_t run = 0;
        for (std::size_t i = 0; i + p < n; ++i) {
            run = w[i] == w[i + p] ? run + 1 : 0;
            if (run >= x)
                return true;
        }
    }
    return false;
}

struct MixedPattern {
    std::vector<std::size_t> members; // member index per segment, e.g. {0, 1, 0}
    std::size_t total_length = 0;     // |w_1| + ... + |w_r|
    std::size_t max_excess = 0;       // only powers xyx with |x| <= max_excess are examined
};

/// Every mixed image h_1(w_1) h_2(w_2) ... of a beta⁺-free word w_1 w_2 ...
/// of the given total length avoids short powers exceeding beta.
inline bool check_mixed_preservation_base(const MorphismFamily& fam, const Ratio& beta, const MixedPattern& pat,
                                          Word* counterexample = nullptr)
{
    if (pat.total_length == 0 || pat.members.empty())
        return true;
    const unsigned k = fam.source_alphabet();
    const std::size_t segs = pat.members.size();
    return for_each_free_word(k, beta, pat.total_length, [&](const std::vector<Letter>& w) {
        // Enumerate segment boundaries 0 <= c_1 <= ... <= c_{segs-1} <= len.
        std::vector<std::size_t> cuts(segs - 1, 0);
        while (true) {
            std::vector<std::size_t> sel(w.size());
            std::size_t seg = 0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                while (seg < cuts.size() && i >= cuts[seg])
                    ++seg;
                sel[i] = pat.members[seg];
            }
            const Word img = fam.mixed_image(Word(w, k), sel);
            if (has_short_power_above(img.letters(), beta, pat.max_excess)) {
                if (counterexample)
                    *counterexample = img;
                return false;
            }
            std::size_t j = cuts.size();
            while (j > 0 && cuts[j - 1] == w.size())
                --j;
            if (j == 0)
                break;
            ++cuts[j - 1];
            for (std::size_t t = j; t < cuts.size(); ++t)
                cuts[t] = cuts[j - 1];
        }
        return true;
    });
}

} // namespace circrep
