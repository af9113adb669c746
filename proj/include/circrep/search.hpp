#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "circrep/exponent.hpp"
#include "circrep/ratio.hpp"
#include "circrep/word.hpp"

namespace circrep {

inline constexpr std::uint64_t default_seed = 20240611;

enum class SearchMode { exhaustive, randomized };

struct SearchConfig {
    unsigned k = 3;
    Ratio beta{7, 4};
    std::size_t n = 1;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t seed = default_seed;
    std::uint64_t node_budget = 0; // 0 = unlimited
    double time_budget = 0;        // seconds, 0 = unlimited
    std::uint64_t restart_nodes = 0; // randomized: nodes per restart, 0 = 64·n
};

enum class Verdict { found, proven_absent, budget_exhausted };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::found:
        return "found";
    case Verdict::proven_absent:
        return "absent";
    case Verdict::budget_exhausted:
        return "budget-exhausted";
    }
    return "?";
}

struct SearchResult {
    Verdict verdict = Verdict::budget_exhausted;
    std::optional<Word> word;
    std::uint64_t nodes = 0;
    std::uint64_t restarts = 0;
    double seconds = 0;
    std::uint64_t seed = 0;
};

namespace detail {

/// w is a linear word free of powers above beta; checks the factors of ww of
/// length <= |w| that cross the seam, as suffixes of w·w[0..t).
inline bool seam_ok(std::vector<Letter>& buf, std::size_t n, const Ratio& beta)
{
    bool ok = true;
    for (std::size_t t = 0; t + 1 < n && ok; ++t) {
        buf.push_back(buf[t]);
        const std::size_t m = buf.size();
        for (std::size_t p = 1; p < n; ++p) {
            const std::size_t need = static_cast<std::size_t>(beta.num() * p / beta.den()) + 1;
            // The factor must stay within n letters and reach back past the seam.
            if (need > n)
                break;
            std::size_t r = 0;
            while (r < need - p && buf[m - 1 - r] == buf[m - 1 - r - p])
                ++r;
            if (r == need - p) {
                ok = false;
                break;
            }
        }
    }
    buf.resize(n);
    return ok;
}

class Backtracker {
public:
    Backtracker(const SearchConfig& cfg, bool fix_first) : cfg_(cfg), fix_first_(fix_first) {}

    /// Visits circular solutions; `on_solution` returns false to stop.
    template <class Rng, class F>
    Verdict run(Rng* rng, F&& on_solution)
    {
        const std::size_t n = cfg_.n;
        const unsigned k = cfg_.k;
        start_ = std::chrono::steady_clock::now();
        std::vector<Letter> w;
        w.reserve(2 * n);
        // order[d] holds the letter order at depth d; pos[d] the next index to try.
        std::vector<std::vector<Letter>> order(n + 1, std::vector<Letter>(k));
        std::vector<unsigned> pos(n + 1, 0);
        auto prepare = [&](std::size_t depth) {
            auto& o = order[depth];
            for (unsigned a = 0; a < k; ++a)
                o[a] = static_cast<Letter>(a);
            if (rng)
                std::shuffle(o.begin(), o.end(), *rng);
            pos[depth] = depth == 0 && fix_first_ ? k - 1 : 0;
            if (depth == 0 && fix_first_)
                o[k - 1] = 0;
        };
        if (n == 0)
            return Verdict::proven_absent;
        prepare(0);
        std::uint64_t since_restart = 0;
        const std::uint64_t restart = cfg_.restart_nodes ? cfg_.restart_nodes : 64 * n;
        while (true) {
            const std::size_t depth = w.size();
            if (pos[depth] >= k) {
                if (depth == 0)
                    return Verdict::proven_absent;
                w.pop_back();
                continue;
            }
            const Letter a = order[depth][pos[depth]++];
            ++nodes;
            ++since_restart;
            if ((nodes & 0xfff) == 0 && out_of_budget())
                return Verdict::budget_exhausted;
            if (rng && since_restart > restart) {
                ++restarts;
                since_restart = 0;
                w.clear();
                prepare(0);
                continue;
            }
            w.push_back(a);
            if (suffix_power_above(w, cfg_.beta)) {
                w.pop_back();
                continue;
            }
            if (w.size() == n) {
                if (seam_ok(w, n, cfg_.beta) && !on_solution(w))
                    return Verdict::found;
                w.pop_back();
                continue;
            }
            prepare(w.size());
        }
    }

    std::uint64_t nodes = 0;
    std::uint64_t restarts = 0;

    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    bool out_of_budget() const
    {
        if (cfg_.node_budget && nodes >= cfg_.node_budget)
            return true;
        return cfg_.time_budget > 0 && elapsed() >= cfg_.time_budget;
    }

    SearchConfig cfg_;
    bool fix_first_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace detail

/// Backtracking search for a circular word of length n over k letters with
/// no factor of exponent above beta. Exhaustive mode fixes the first letter
/// to 0 and certifies absence; randomized mode shuffles the letter order at
/// every node and restarts periodically.
inline SearchResult search_circular(const SearchConfig& cfg)
{
    if (cfg.k < 1 || cfg.k > max_alphabet)
        throw std::invalid_argument("search_circular: alphabet size must be in 1..6");
    if (cfg.n == 0)
        throw std::invalid_argument("search_circular: length must be positive");
    SearchResult res;
    res.seed = cfg.seed;
    const bool randomized = cfg.mode == SearchMode::randomized;
    detail::Backtracker bt(cfg, !randomized);
    std::mt19937_64 rng(cfg.seed);
    std::vector<Letter> found;
    res.verdict = bt.run(randomized ? &rng : nullptr, [&](const std::vector<Letter>& w) {
        found = w;
        return false;
    });
    if (res.verdict == Verdict::found) {
        Word word(found, cfg.k);
        if (!is_circular_beta_plus_free(word.letters(), cfg.beta))
            throw std::logic_error("search_circular: returned word fails the circular check");
        res.word = std::move(word);
    } else if (randomized && res.verdict == Verdict::proven_absent) {
        // Randomized runs never certify absence; a finished tree is only
        // reachable without restarts, which still counts as exhaustive.
        res.verdict = bt.restarts == 0 ? Verdict::proven_absent : Verdict::budget_exhausted;
    }
    res.nodes = bt.nodes;
    res.restarts = bt.restarts;
    res.seconds = bt.elapsed();
    return res;
}

/// Number of linear representatives w (first letter fixed to 0 when
/// `fix_first`) whose circular word avoids powers above beta.
inline std::uint64_t count_circular(unsigned k, const Ratio& beta, std::size_t n, bool fix_first = true)
{
    SearchConfig cfg;
    cfg.k = k;
    cfg.beta = beta;
    cfg.n = n;
    detail::Backtracker bt(cfg, fix_first);
    std::uint64_t count = 0;
    bt.run(static_cast<std::mt19937_64*>(nullptr), [&](const std::vector<Letter>&) {
        ++count;
        return true;
    });
    return count;
}

struct ExceptionReport {
    std::vector<std::size_t> absent;  // lengths certified to have no word
    std::vector<std::size_t> present; // lengths with a word
    std::uint64_t nodes = 0;
    bool matches_expected = false;
};

inline const std::vector<std::size_t>& ternary_exceptional_lengths()
{
    static const std::vector<std::size_t> v{5, 7, 9, 10, 14, 16, 17, 22};
    return v;
}

/// Exhaustive 7/4⁺ ternary search for every length up to max_len.
inline ExceptionReport prove_ternary_exceptions(std::size_t max_len = 22)
{
    ExceptionReport rep;
    for (std::size_t n = 1; n <= max_len; ++n) {
        SearchConfig cfg;
        cfg.k = 3;
        cfg.beta = thresholds::seven_fourths;
        cfg.n = n;
        const auto r = search_circular(cfg);
        rep.nodes += r.nodes;
        (r.verdict == Verdict::found ? rep.present : rep.absent).push_back(n);
    }
    std::vector<std::size_t> expected;
    for (std::size_t x : ternary_exceptional_lengths())
        if (x <= max_len)
            expected.push_back(x);
    rep.matches_expected = rep.absent == expected;
    return rep;
}

} // namespace circrep
