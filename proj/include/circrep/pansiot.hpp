#pragma once

#include <algorithm>
#include <cstddef>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "circrep/exponent.hpp"
#include "circrep/morphism.hpp"
#include "circrep/ratio.hpp"
#include "circrep/word.hpp"

namespace circrep {

// Letters of A ∪ {e}.
inline constexpr Letter la = 0, lb = 1, lc = 2, ld = 3, le = 4;

struct NotInImageOfM : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ProvenanceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Word letters_word(std::string_view s, unsigned k = 4) { return Word::parse(s, k); }

namespace pansiot {

inline const Word& t1()
{
    static const Word w = Word::parse("10110101101", 2);
    return w;
}

inline const Word& t2()
{
    static const Word w = Word::parse("1011010110110101101", 2);
    return w;
}

inline const Word& T1()
{
    static const Word w = letters_word("abcdbacbdcabcd");
    return w;
}

inline const Word& T2()
{
    static const Word w = letters_word("abcdbacbdcabcdacbadcab");
    return w;
}

} // namespace pansiot

/// Prefix stream of p = φ^∞(1). The fixed point satisfies p = φ(p), so it
/// is grown by expanding its own letters one at a time.
class BinaryStream {
public:
    Word prefix(std::size_t n)
    {
        std::lock_guard lock(mutex_);
        while (buf_.size() < n) {
            const Letter x = buf_[next_++];
            if (x == 0)
                buf_.insert(buf_.end(), {1, 0, 1, 1, 0, 1});
            else
                buf_.insert(buf_.end(), {1, 0});
        }
        return Word(std::vector<Letter>(buf_.begin(), buf_.begin() + static_cast<std::ptrdiff_t>(n)), 2);
    }

    static BinaryStream& global()
    {
        static BinaryStream s;
        return s;
    }

private:
    std::mutex mutex_;
    std::vector<Letter> buf_{1, 0};
    std::size_t next_ = 1;
};

inline Word gen_p(std::size_t n) { return BinaryStream::global().prefix(n); }

/// M(w): "abc" followed by one letter per symbol of w. Symbol 0 repeats the
/// letter three back; symbol 1 writes the letter absent from the last three.
inline Word encode_M(const Word& w)
{
    std::vector<Letter> out{la, lb, lc};
    out.reserve(w.size() + 3);
    for (Letter x : w.letters()) {
        const std::size_t i = out.size();
        if (x > 1)
            throw std::invalid_argument("encode_M: input is not binary");
        if (x == 0) {
            out.push_back(out[i - 3]);
        } else {
            const unsigned seen = (1u << out[i - 1]) | (1u << out[i - 2]) | (1u << out[i - 3]);
            Letter fresh = 0;
            while (seen & (1u << fresh))
                ++fresh;
            out.push_back(fresh);
        }
    }
    return Word(std::move(out), 4, Notation::letters);
}

/// The M-recurrence symbol producing position i >= 3 of v, if any.
inline std::optional<Letter> m_symbol(std::span<const Letter> v, std::size_t i)
{
    const Letter x = v[i], p1 = v[i - 1], p2 = v[i - 2], p3 = v[i - 3];
    if (p1 == p2 || p1 == p3 || p2 == p3 || x > ld)
        return std::nullopt;
    if (x == p3)
        return Letter{0};
    if (x != p1 && x != p2)
        return Letter{1};
    return std::nullopt;
}

inline Word decode_M(const Word& W)
{
    const auto v = W.letters();
    if (v.size() < 3 || v[0] != la || v[1] != lb || v[2] != lc)
        throw NotInImageOfM("decode_M: word does not start with the seed abc");
    std::vector<Letter> out;
    out.reserve(v.size() - 3);
    for (std::size_t i = 3; i < v.size(); ++i) {
        const auto s = m_symbol(v, i);
        if (!s)
            throw NotInImageOfM("decode_M: position " + std::to_string(i + 1) + " follows neither rule");
        out.push_back(*s);
    }
    return Word(std::move(out), 2);
}

/// Length-n prefix of P = M(p).
inline Word gen_P(std::size_t n)
{
    if (n <= 3)
        return letters_word("abc").prefix(n);
    return encode_M(gen_p(n - 3));
}

/// Every position of w obeys the M recurrence relative to the three letters
/// before it. This is the local shape of all factors of P.
inline bool consistent_with_M(const Word& w)
{
    const auto v = w.letters();
    for (Letter x : v)
        if (x > ld)
            return false;
    for (std::size_t i = 3; i < v.size(); ++i)
        if (!m_symbol(v, i))
            return false;
    if (v.size() == 3 && (v[0] == v[1] || v[0] == v[2] || v[1] == v[2]))
        return false;
    return v.size() < 2 || v[0] != v[1];
}

/// u = σ(v) for some bijection σ between their letters.
inline bool is_letter_permutation_of(std::span<const Letter> u, std::span<const Letter> v)
{
    if (u.size() != v.size())
        return false;
    Letter fwd[max_alphabet], bwd[max_alphabet];
    std::fill(std::begin(fwd), std::end(fwd), Letter{255});
    std::fill(std::begin(bwd), std::end(bwd), Letter{255});
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (fwd[v[i]] == 255 && bwd[u[i]] == 255) {
            fwd[v[i]] = u[i];
            bwd[u[i]] = v[i];
        } else if (fwd[v[i]] != u[i] || bwd[u[i]] != v[i]) {
            return false;
        }
    }
    return true;
}

/// Maximal repetitions of a prefix of P with exponent above `threshold`,
/// each reported once at its minimal period.
inline std::vector<PowerWitness> scan_high_powers(const Word& Pprefix, const Ratio& threshold)
{
    auto runs = maximal_runs_above(Pprefix.letters(), threshold);
    std::vector<PowerWitness> out;
    for (const auto& r : runs) {
        const auto f = Pprefix.letters().subspan(r.start, r.length);
        if (minimal_period(f) == r.period)
            out.push_back(r);
    }
    return out;
}

/// Occurrences of t1 in a prefix of p and how consecutive ones relate.
struct T1Scan {
    std::vector<std::size_t> occurrences;
    std::size_t overlapping_pairs = 0;
    std::size_t bad_overlaps = 0;  // overlap not of the t2 shape, or three mutually overlapping
    std::size_t min_gap = SIZE_MAX; // |v| over factors t1 v t1 with disjoint occurrences
};

inline T1Scan scan_t1(const Word& p)
{
    T1Scan r;
    const auto& t = pansiot::t1();
    const auto hay = p.letters();
    for (std::size_t i = 0; i + t.size() <= hay.size(); ++i)
        if (std::equal(t.vec().begin(), t.vec().end(), hay.begin() + static_cast<std::ptrdiff_t>(i)))
            r.occurrences.push_back(i);
    const auto& occ = r.occurrences;
    for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
        const std::size_t a = occ[k], b = occ[k + 1];
        if (b < a + t.size()) {
            ++r.overlapping_pairs;
            const bool shaped = b == a + 8 && a + pansiot::t2().size() <= hay.size() &&
                                std::equal(pansiot::t2().vec().begin(), pansiot::t2().vec().end(),
                                           hay.begin() + static_cast<std::ptrdiff_t>(a));
            const bool third = k + 2 < occ.size() && occ[k + 2] < b + t.size();
            if (!shaped || third)
                ++r.bad_overlaps;
        } else {
            r.min_gap = std::min(r.min_gap, b - a - t.size());
        }
    }
    return r;
}

/// Exponent of M(μ^j(uvu)) for j = 1, 2 stays below 14/11 in both base cases.
inline bool check_mu_cases()
{
    const std::pair<const char*, const char*> cases[] = {{"", "101101101"}, {"1", "011010110"}};
    for (auto [u, v] : cases) {
        Word x = Word::parse(std::string(u) + v + u, 2);
        for (int j = 1; j <= 2; ++j) {
            x = morphisms::mu(x);
            if (!(exponent(encode_M(x)) < thresholds::fourteen_elevenths))
                return false;
        }
    }
    return true;
}

/// η(w) with the positions (0-based) that were changed from d to e.
struct EtaWord {
    Word word;
    Word source;
    std::vector<std::size_t> edits;

    /// Changing every e back to d gives the source factor.
    bool erases_to_source() const
    {
        if (word.size() != source.size())
            return false;
        for (std::size_t i = 0; i < word.size(); ++i) {
            const Letter x = word[i] == le ? ld : word[i];
            if (x != source[i])
                return false;
        }
        return true;
    }
};

/// Figure-1 repair pass, scanning i ascending over the word as it is being
/// modified. Indices below are 1-based as in the pseudocode.
inline EtaWord eta(const Word& w, bool check_provenance = true)
{
    if (check_provenance && !consistent_with_M(w))
        throw ProvenanceError("eta: input " + w.str() + " is not shaped like a factor of P");
    std::vector<Letter> v(w.vec());
    std::vector<std::size_t> edits;
    const long n = static_cast<long>(v.size());
    auto at = [&](long i) -> Letter& { return v[static_cast<std::size_t>(i - 1)]; };
    auto equal4 = [&](long i, long j) {
        for (long t = 0; t < 4; ++t)
            if (at(i + t) != at(j + t))
                return false;
        return true;
    };
    // Changes the unique d in w[lo:hi] to e.
    auto change_d = [&](long lo, long hi) {
        for (long i = lo; i <= hi; ++i)
            if (at(i) == ld) {
                at(i) = le;
                edits.push_back(static_cast<std::size_t>(i - 1));
                return;
            }
        throw ProvenanceError("eta: no d in w[" + std::to_string(lo) + ":" + std::to_string(hi) + "] of " +
                              w.str());
    };
    for (long i = 1; i <= n - 13; ++i) {
        if (!equal4(i, i + 10))
            continue;
        if (i <= n - 21 && equal4(i + 8, i + 18)) {
            if (at(i) == ld || at(i + 1) == ld) {
                change_d(i + 10, i + 11);
            } else {
                change_d(i, i + 3);
                change_d(i + 18, i + 21);
            }
        } else if (i < 19) {
            change_d(i + 10, i + 13);
        } else {
            change_d(i, i + 3);
        }
    }
    std::sort(edits.begin(), edits.end());
    return EtaWord{Word(std::move(v), 5, Notation::letters), w, std::move(edits)};
}

/// Every length-15 factor has at least two d's and at most one e.
inline bool eta_frequency_ok(const Word& x)
{
    const auto v = x.letters();
    if (v.size() < 15)
        return true;
    int d = 0, e = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        d += v[i] == ld;
        e += v[i] == le;
        if (i >= 15) {
            d -= v[i - 15] == ld;
            e -= v[i - 15] == le;
        }
        if (i >= 14 && (d < 2 || e > 1))
            return false;
    }
    return true;
}

struct Bookend {
    Word word;
    std::size_t start = 0; // 0-based position in P
};

inline std::size_t default_scan_bound(std::size_t n) { return std::max<std::size_t>(8 * n, 100000); }

/// First factor of `P` of length exactly len that begins and ends with
/// `letter` (any repeated letter when absent).
inline std::optional<Bookend> find_bookend(const Word& P, std::size_t len, std::optional<Letter> letter = ld)
{
    if (len == 0 || len > P.size())
        return std::nullopt;
    for (std::size_t i = 0; i + len <= P.size(); ++i) {
        const Letter x = P[i];
        if (x == P[i + len - 1] && (!letter || x == *letter))
            return Bookend{P.substr(i, len), i};
    }
    return std::nullopt;
}

/// A factor of P of length n or n + 1 beginning and ending in d.
inline Bookend bookend_factor(std::size_t n, std::size_t scan_bound = 0)
{
    if (n < 3)
        throw std::invalid_argument("bookend_factor: n must be at least 3");
    const Word P = gen_P(scan_bound ? scan_bound : default_scan_bound(n));
    if (auto b = find_bookend(P, n))
        return *b;
    if (auto b = find_bookend(P, n + 1))
        return *b;
    throw std::runtime_error("bookend_factor: no d...d factor of length " + std::to_string(n) + " or " +
                             std::to_string(n + 1) + " in the first " + std::to_string(P.size()) +
                             " letters of P");
}

} // namespace circrep
