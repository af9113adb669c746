#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "circrep/ratio.hpp"
#include "circrep/word.hpp"

namespace circrep {

/// Location of a fractional power. For circular words `start` indexes the
/// doubled word ww and lies in [0, |w|).
struct PowerWitness {
    std::size_t start = 0;
    std::size_t period = 1;
    std::size_t length = 1;

    Ratio exponent() const { return Ratio(length, period); }
    /// Length of the excess: the part of the power after its first period.
    std::size_t excess() const { return length - period; }

    friend bool operator==(const PowerWitness&, const PowerWitness&) = default;
};

struct MaxExponent {
    Ratio value{1, 1};
    PowerWitness witness;
};

/// Smallest p with w[i+p] = w[i] for every valid i (Knuth–Morris–Pratt border).
inline std::size_t minimal_period(std::span<const Letter> w)
{
    if (w.empty())
        throw std::domain_error("minimal_period: empty word");
    std::vector<std::size_t> border(w.size() + 1, 0);
    std::size_t b = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
        while (b > 0 && w[i] != w[b])
            b = border[b];
        if (w[i] == w[b])
            ++b;
        border[i + 1] = b;
    }
    return w.size() - border[w.size()];
}

inline std::size_t minimal_period(const Word& w) { return minimal_period(w.letters()); }

inline Ratio exponent(const Word& w) { return Ratio(w.size(), minimal_period(w)); }

namespace detail {

inline bool better(const Ratio& e, std::size_t start, std::size_t period, const MaxExponent& cur)
{
    const auto c = e <=> cur.value;
    if (c != 0)
        return c > 0;
    if (start != cur.witness.start)
        return start < cur.witness.start;
    return period < cur.witness.period;
}

} // namespace detail

/// Maximum exponent over all nonempty factors of w, with the witness that
/// has the smallest start and then the smallest period.
///
/// For each period p we scan the maximal runs of positions i with
/// w[i] = w[i+p]; a run of r matches is a factor of length r+p with period p.
/// A factor attaining the maximum is always such a maximal run at its own
/// minimal period, so the scan is exact. O(n^2) time, O(1) space.
inline MaxExponent max_exponent(std::span<const Letter> w)
{
    if (w.empty())
        throw std::domain_error("max_exponent: empty word");
    const std::size_t n = w.size();
    MaxExponent best{Ratio(1, 1), PowerWitness{0, 1, 1}};
    for (std::size_t p = 1; p < n; ++p) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + p <= n; ++i) {
            if (i + p < n && w[i] == w[i + p]) {
                ++run;
                continue;
            }
            if (run > 0) {
                const std::size_t start = i - run;
                const std::size_t len = run + p;
                if (best.value.reached_by(len, p)) {
                    const Ratio e(len, p);
                    if (detail::better(e, start, p, best))
                        best = {e, PowerWitness{start, p, len}};
                }
            }
            run = 0;
        }
    }
    return best;
}

inline MaxExponent max_exponent(const Word& w) { return max_exponent(w.letters()); }

/// First factor (by period, then start) with exponent > beta, if any.
inline bool find_power_above(std::span<const Letter> w, const Ratio& beta, PowerWitness* out = nullptr)
{
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + p < n; ++i) {
            if (w[i] == w[i + p]) {
                ++run;
                if (beta.exceeded_by(run + p, p)) {
                    if (out)
                        *out = PowerWitness{i + 1 - run, p, run + p};
                    return true;
                }
            } else {
                run = 0;
            }
        }
    }
    return false;
}

/// No factor of exponent strictly greater than beta.
inline bool is_beta_plus_free(std::span<const Letter> w, const Ratio& beta)
{
    return !find_power_above(w, beta);
}

inline bool is_beta_plus_free(const Word& w, const Ratio& beta) { return is_beta_plus_free(w.letters(), beta); }

/// No factor of exponent greater than or equal to beta.
inline bool is_beta_free(const Word& w, const Ratio& beta)
{
    if (w.empty())
        return true;
    return max_exponent(w).value < beta;
}

/// No factor that is a (beta', p')-power with beta' > beta and p' >= min_period,
/// where p' ranges over all periods of the factor, not only the minimal one.
inline bool is_gen_free(std::span<const Letter> w, const Ratio& beta, std::size_t min_period)
{
    const std::size_t n = w.size();
    for (std::size_t p = std::max<std::size_t>(min_period, 1); p < n; ++p) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + p < n; ++i) {
            if (w[i] == w[i + p]) {
                if (beta.exceeded_by(++run + p, p))
                    return false;
            } else {
                run = 0;
            }
        }
    }
    return true;
}

inline bool is_gen_free(const Word& w, const Ratio& beta, std::size_t min_period)
{
    return is_gen_free(w.letters(), beta, min_period);
}

/// All maximal repetitions (maximal runs of one period) whose exponent
/// exceeds beta. A run is reported at every period it has, so a run of
/// minimal period q also shows up at 2q, 3q, ... when those still exceed beta.
inline std::vector<PowerWitness> maximal_runs_above(std::span<const Letter> w, const Ratio& beta)
{
    std::vector<PowerWitness> out;
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        std::size_t run = 0;
        for (std::size_t i = 0; i + p <= n; ++i) {
            if (i + p < n && w[i] == w[i + p]) {
                ++run;
                continue;
            }
            if (run > 0 && beta.exceeded_by(run + p, p))
                out.push_back(PowerWitness{i - run, p, run + p});
            run = 0;
        }
    }
    return out;
}

/// True iff some suffix of w has exponent > beta. Assumes beta >= 1.
/// This is the per-node test of the backtracking engines: every factor of a
/// word is a suffix of one of its prefixes.
inline bool suffix_power_above(std::span<const Letter> w, const Ratio& beta)
{
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        // Shortest length with exponent > beta at period p.
        const std::size_t need = static_cast<std::size_t>(beta.num() * p / beta.den()) + 1;
        if (need > n)
            break;
        std::size_t t = 0;
        while (t < need - p && w[n - 1 - t] == w[n - 1 - t - p])
            ++t;
        if (t == need - p)
            return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Circular words. The factors of (w) are the factors of ww of length <= |w|.

/// Maximum exponent over all factors of the circular word; ties broken by
/// smallest start in [0, |w|), then smallest period.
inline MaxExponent circular_max_exponent(std::span<const Letter> w)
{
    if (w.empty())
        throw std::domain_error("circular_max_exponent: empty word");
    const std::size_t n = w.size();
    MaxExponent best{Ratio(1, 1), PowerWitness{0, 1, 1}};
    auto consider = [&](std::size_t start, std::size_t p, std::size_t len) {
        if (!best.value.reached_by(len, p))
            return;
        const Ratio e(len, p);
        if (detail::better(e, start, p, best))
            best = {e, PowerWitness{start, p, len}};
    };
    for (std::size_t p = 1; p < n; ++p) {
        // Find a mismatch to anchor the cyclic scan.
        std::size_t anchor = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] != w[(i + p) % n]) {
                anchor = i;
                break;
            }
        }
        if (anchor == n) {
            consider(0, p, n);
            continue;
        }
        std::size_t run = 0;
        for (std::size_t k = 1; k <= n; ++k) {
            const std::size_t i = (anchor + k) % n;
            if (k < n && w[i] == w[(i + p) % n]) {
                ++run;
                continue;
            }
            if (run > 0) {
                const std::size_t s = (i + n - run) % n;
                if (run + p <= n) {
                    consider(s, p, run + p);
                } else {
                    // Several length-n windows fit in the run; pick the least start.
                    const std::size_t slack = run + p - n;
                    consider(s + slack >= n ? 0 : s, p, n);
                }
            }
            run = 0;
        }
    }
    return best;
}

inline MaxExponent circular_max_exponent(const CircularWord& cw)
{
    return circular_max_exponent(cw.representative().letters());
}

/// Early-exit circular beta⁺-freeness test.
inline bool is_circular_beta_plus_free(std::span<const Letter> w, const Ratio& beta)
{
    const std::size_t n = w.size();
    if (n == 0)
        return true;
    for (std::size_t p = 1; p < n; ++p) {
        // Longest factor with period p is capped at n; quick reject when even that is fine.
        if (!beta.exceeded_by(n, p))
            break;
        std::size_t anchor = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (w[i] != w[(i + p) % n]) {
                anchor = i;
                break;
            }
        }
        if (anchor == n)
            return false;
        std::size_t run = 0;
        for (std::size_t k = 1; k < n; ++k) {
            const std::size_t i = (anchor + k) % n;
            if (w[i] == w[(i + p) % n]) {
                ++run;
                if (beta.exceeded_by(std::min(run + p, n), p))
                    return false;
            } else {
                run = 0;
            }
        }
    }
    return true;
}

inline bool is_circular_beta_plus_free(const CircularWord& cw, const Ratio& beta)
{
    return is_circular_beta_plus_free(cw.representative().letters(), beta);
}

} // namespace circrep
