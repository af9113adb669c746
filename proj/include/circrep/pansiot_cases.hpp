#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circrep/boundary_tables.hpp"
#include "circrep/exponent.hpp"
#include "circrep/pansiot.hpp"

namespace circrep {

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace perms {

inline const Permutation& sigma()
{
    static const Permutation p = Permutation::from_cycles("(a b c)(d e)", 5);
    return p;
}

inline const Permutation& tau()
{
    static const Permutation p = Permutation::from_cycles("(a c)(d e)", 5);
    return p;
}

inline const Permutation& pi()
{
    static const Permutation p = Permutation::from_cycles("(b d c)", 5);
    return p;
}

inline const Permutation& rho()
{
    static const Permutation p = Permutation::from_cycles("(d e)", 5);
    return p;
}

inline const Permutation& for_case(CaseTag t)
{
    return t == CaseTag::I ? sigma() : t == CaseTag::IIa ? tau() : rho();
}

} // namespace perms

/// A located factor of P, already renamed so that it has the shape its case needs.
struct CaseDescriptor {
    CaseTag tag = CaseTag::I;
    std::size_t position = 0; // 0-based start in P of w (Case I, II(a)) or of ẇ (Case II(b1))
    Permutation normalize;    // applied to the raw factor of P
    Word w;                   // w, or ẇ in Case II(b1)
    Word w2;                  // ẅ in Case II(b1), empty otherwise
    Letter alpha = la, beta = la, gamma = la, delta = la;
};

namespace detail {

/// A permutation of A ∪ {e} fixing d and e with the given images for up to
/// three letters of A; the remaining letters fill in increasing order.
inline Permutation fix_d_perm(std::initializer_list<std::pair<Letter, Letter>> pairs)
{
    std::vector<Letter> img(5, 255);
    std::vector<bool> used(5, false);
    img[ld] = ld;
    img[le] = le;
    used[ld] = used[le] = true;
    for (auto [from, to] : pairs) {
        if (img[from] != 255 || used[to])
            throw std::logic_error("fix_d_perm: inconsistent letter assignment");
        img[from] = to;
        used[to] = true;
    }
    Letter next = 0;
    for (Letter x = 0; x < 5; ++x) {
        if (img[x] != 255)
            continue;
        while (used[next])
            ++next;
        img[x] = next;
        used[next] = true;
    }
    return Permutation(img);
}

inline Word perm4(const Word& w, const Permutation& p)
{
    return apply_permutation(w, p).with_alphabet(4, Notation::letters);
}

} // namespace detail

/// The factor behind W_2n, tried as Case I over the whole scan range first,
/// then as Case II. Occurrences of Case II(b2) are skipped; the scan carries
/// on to the next occurrence. `only` restricts the search to one case.
inline CaseDescriptor find_construction_factor(std::size_t n, std::size_t scan_bound = 0,
                                               std::optional<CaseTag> only = std::nullopt)
{
    if (n < 73)
        throw std::invalid_argument("find_construction_factor: n must be at least 73");
    const Word P = gen_P(scan_bound ? scan_bound : default_scan_bound(n));
    const std::size_t N = P.size();

    if (!only || *only == CaseTag::I) {
        // w = α w' β, |w'| = n - 4.
        const std::size_t L = n - 4;
        for (std::size_t s = 1; s + L < N; ++s) {
            if (P[s] != ld || P[s + L - 1] != ld)
                continue;
            const Letter a = P[s - 1], b = P[s + L];
            const auto perm = a == b ? detail::fix_d_perm({{a, la}}) : detail::fix_d_perm({{a, la}, {b, lb}});
            CaseDescriptor d;
            d.tag = CaseTag::I;
            d.position = s - 1;
            d.normalize = perm;
            d.w = detail::perm4(P.substr(s - 1, L + 2), perm);
            d.alpha = la;
            d.beta = perm(b);
            return d;
        }
    }
    if (!only || *only != CaseTag::I) {
        // w = α β w' γ, |w'| = n - 5.
        const std::size_t L = n - 5;
        for (std::size_t s = 2; s + L < N; ++s) {
            if (P[s] != ld || P[s + L - 1] != ld)
                continue;
            const Letter a = P[s - 2], b = P[s - 1];
            const auto perm = detail::fix_d_perm({{a, la}, {b, lb}});
            const Letter g = perm(P[s + L]);
            CaseDescriptor d;
            d.position = s - 2;
            d.normalize = perm;
            d.alpha = la;
            d.beta = lb;
            d.gamma = g;
            if (g == la || g == lc) {
                if (only && *only != CaseTag::IIa)
                    continue;
                d.tag = CaseTag::IIa;
                d.w = detail::perm4(P.substr(s - 2, L + 3), perm);
                return d;
            }
            if (s + L + 1 >= N)
                continue;
            d.delta = perm(P[s + L + 1]);
            if (d.delta != la || (only && *only != CaseTag::IIb1))
                continue; // Case II(b2)
            d.tag = CaseTag::IIb1;
            d.position = s - 1;
            d.w = detail::perm4(P.substr(s - 1, L + 2), perm);
            d.w2 = detail::perm4(P.substr(s - 2, L + 4), perm);
            return d;
        }
    }
    throw ConstructionError("find_construction_factor: no usable factor for n = " + std::to_string(n) +
                            " in the first " + std::to_string(N) + " letters of P");
}

/// η′ and η″ for a descriptor, after boundary adjustments.
struct EtaPair {
    Word eta1;
    Word eta2;
    std::vector<std::string> rules;
};

inline EtaPair eta_pair(const CaseDescriptor& d)
{
    EtaPair out;
    out.eta1 = eta(d.w).word;
    out.eta2 = d.tag == CaseTag::IIb1 ? eta(detail::perm4(d.w2, perms::pi())).word : out.eta1;
    out.rules = apply_boundary_fixes(d.tag, out.eta1, out.eta2).applied;
    return out;
}

/// de η′ ed [θ(η″)]^R for the case's permutation θ.
inline Word assemble_even(CaseTag tag, const Word& eta1, const Word& eta2)
{
    const Word de = Word::parse("de", 5), ed = Word::parse("ed", 5);
    return de + eta1 + ed + reverse(apply_permutation(eta2, perms::for_case(tag)));
}

struct EvenBuild {
    CaseDescriptor descriptor;
    std::vector<std::string> rules;
    Word word;
    std::size_t eta_offset = 2; // η′ occupies [eta_offset, eta_offset + eta_length)
    std::size_t eta_length = 0;
};

inline EvenBuild build_even_detailed(std::size_t two_n, std::size_t scan_bound = 0,
                                     std::optional<CaseTag> only = std::nullopt)
{
    if (two_n % 2 != 0 || two_n < 146)
        throw std::invalid_argument("build_even: length must be even and at least 146");
    EvenBuild b;
    b.descriptor = find_construction_factor(two_n / 2, scan_bound, only);
    const EtaPair e = eta_pair(b.descriptor);
    b.rules = e.rules;
    b.word = assemble_even(b.descriptor.tag, e.eta1, e.eta2);
    b.eta_length = e.eta1.size();
    if (b.word.size() != two_n)
        throw ConstructionError("build_even: assembled length " + std::to_string(b.word.size()));
    if (!is_circular_beta_plus_free(b.word.letters(), thresholds::four_thirds))
        throw ConstructionError("build_even: word of length " + std::to_string(two_n) + " (case " +
                                to_string(b.descriptor.tag) + ") is not 4/3+-free: " + b.word.str());
    return b;
}

inline CircularWord build_even(std::size_t two_n, std::size_t scan_bound = 0)
{
    return CircularWord(build_even_detailed(two_n, scan_bound).word);
}

/// z = γβαγdαβdγαdβγdαγβα with {α, β, γ} = {a, b, c}.
struct ZOccurrence {
    std::size_t position = 0; // 0-based in the word searched
    Letter alpha = la, beta = lb, gamma = lc;
};

inline std::optional<ZOccurrence> find_z(std::span<const Letter> v, std::size_t from, std::size_t to)
{
    static constexpr std::string_view shape = "gbagdabdgadbgdagba";
    for (std::size_t i = from; i + shape.size() <= to; ++i) {
        const Letter g = v[i], b = v[i + 1], a = v[i + 2];
        if (g > lc || b > lc || a > lc || g == b || g == a || a == b)
            continue;
        bool ok = true;
        for (std::size_t k = 0; ok && k < shape.size(); ++k) {
            const char c = shape[k];
            ok = v[i + k] == (c == 'a' ? a : c == 'b' ? b : c == 'g' ? g : ld);
        }
        if (ok)
            return ZOccurrence{i, a, b, g};
    }
    return std::nullopt;
}

struct OddBuild {
    EvenBuild even;
    ZOccurrence z;
    char condition = 'a'; // which of (a), (b), (c) was used
    bool preferred = true; // it was the first of them whose letter condition holds
    std::size_t inserted_at = 0;
    Word word;
};

inline OddBuild build_odd_detailed(std::size_t two_n_plus_1, std::size_t scan_bound = 0)
{
    if (two_n_plus_1 % 2 != 1 || two_n_plus_1 < 1291)
        throw std::invalid_argument("build_odd: length must be odd and at least 1291");
    OddBuild ob;
    ob.even = build_even_detailed(two_n_plus_1 - 1, scan_bound);
    const Word& W = ob.even.word;
    const std::size_t off = ob.even.eta_offset, len = ob.even.eta_length;
    // η′[23:-23], 1-based inclusive.
    const auto z = find_z(W.letters(), off + 22, off + len - 22);
    if (!z)
        throw ConstructionError("build_odd: z does not occur in the middle of eta for length " +
                                std::to_string(two_n_plus_1));
    ob.z = *z;
    const Letter lambda = W[off + len - 1], first = W[off];
    struct Option {
        char name;
        bool holds;
        std::size_t offset;
    };
    const Option options[] = {
        {'a', z->alpha != lambda && z->beta != first, 6},
        {'b', z->gamma != lambda && z->alpha != first, 9},
        {'c', z->beta != lambda && z->gamma != first, 12},
    };
    // Preferred order: the first condition that holds, then any remaining one.
    std::vector<Option> order;
    for (const auto& o : options)
        if (o.holds)
            order.push_back(o);
    for (const auto& o : options)
        if (!o.holds)
            order.push_back(o);
    for (const auto& o : order) {
        Word cand = W;
        cand.insert(z->position + o.offset, le);
        if (is_circular_beta_plus_free(cand.letters(), thresholds::four_thirds)) {
            ob.condition = o.name;
            ob.preferred = o.name == order.front().name && o.holds;
            ob.inserted_at = z->position + o.offset;
            ob.word = std::move(cand);
            return ob;
        }
    }
    throw ConstructionError("build_odd: no insertion point in z gives a 4/3+-free word of length " +
                            std::to_string(two_n_plus_1));
}

inline CircularWord build_odd(std::size_t two_n_plus_1, std::size_t scan_bound = 0)
{
    return CircularWord(build_odd_detailed(two_n_plus_1, scan_bound).word);
}

// ---------------------------------------------------------------------------
// Boundary exhaustion over factors of P.

/// The word checked for 4/3⁺-freeness at one seam: the "de" seam uses
/// prefixes, the "ed" seam suffixes.
inline Word glue_word(CaseTag tag, Side side, const Word& eta1, const Word& eta2)
{
    const Permutation& th = perms::for_case(tag);
    const std::size_t L = (tag == CaseTag::IIa && side == Side::prefix) ? 46 : 39;
    const Word de = Word::parse("de", 5), ed = Word::parse("ed", 5);
    if (side == Side::prefix)
        return reverse(apply_permutation(eta2.prefix(L), th)) + de + eta1.prefix(L);
    return eta1.suffix(L) + ed + reverse(apply_permutation(eta2.suffix(L), th));
}

struct BoundaryCase {
    CaseTag tag;
    Side side;
    Word eta1; // unadjusted
    Word eta2; // unadjusted
};

struct ExhaustionReport {
    std::size_t boundaries = 0;               // distinct (case, side, window) combinations examined
    std::map<std::string, std::size_t> exceptional; // per case/side: distinct windows failing before fixes
    std::map<std::string, std::size_t> rule_hits;   // per rule id (conjugates merged), distinct windows
    std::vector<std::string> unmatched_failures;    // fail with no applicable rule
    std::vector<std::string> failures_after_fix;    // a rule applied but the glue still fails
    std::vector<std::string> unused_rules;

    bool ok() const { return unmatched_failures.empty() && failures_after_fix.empty() && unused_rules.empty(); }
};

namespace detail {

inline std::string base_rule_id(std::string id)
{
    while (!id.empty() && id.back() == '\'')
        id.pop_back();
    return id;
}

/// All permutations of A ∪ {e} fixing d and e.
inline std::vector<Permutation> perms_fixing_d()
{
    std::vector<Permutation> out;
    Letter v[3] = {la, lb, lc};
    do {
        out.push_back(fix_d_perm({{la, v[0]}, {lb, v[1]}, {lc, v[2]}}));
    } while (std::next_permutation(v, v + 3));
    return out;
}

inline std::string window_key(const Word& eta1, const Word& eta2, Side side, std::size_t L)
{
    auto part = [&](const Word& x) { return side == Side::prefix ? x.prefix(L).str() : x.suffix(L).str(); };
    return part(eta1) + "|" + part(eta2);
}

} // namespace detail

/// Enumerates the boundary words realizable from factors of the given
/// prefix of P and checks every glue word after adjustment.
/// `window_lengths` are lengths of w (Case I/II(a)) used for the windows;
/// each must be at least 71.
inline ExhaustionReport verify_boundary_exhaustion(const Word& P, const std::vector<std::size_t>& window_lengths)
{
    ExhaustionReport rep;
    std::set<std::string> seen;
    std::map<std::string, std::set<std::string>> hits;
    const auto all = detail::perms_fixing_d();

    auto examine = [&](CaseTag tag, Side side, const Word& e1, const Word& e2) {
        const std::size_t L = (tag == CaseTag::IIa && side == Side::prefix) ? 46 : 39;
        const std::string key = std::string(to_string(tag)) + to_string(side) + detail::window_key(e1, e2, side, L);
        if (!seen.insert(key).second)
            return;
        ++rep.boundaries;
        const std::string label = std::string(to_string(tag)) + " " + to_string(side);
        const bool bad_before = !is_beta_plus_free(glue_word(tag, side, e1, e2), thresholds::four_thirds);
        if (bad_before)
            ++rep.exceptional[label];
        Word f1 = e1, f2 = e2;
        const BoundaryRule* r = find_boundary_rule(tag, side, e1);
        if (r) {
            apply_boundary_rule(*r, f1, f2);
            hits[detail::base_rule_id(r->id)].insert(key);
        }
        if (!is_beta_plus_free(glue_word(tag, side, f1, f2), thresholds::four_thirds)) {
            const std::string what = label + ": " + (side == Side::prefix ? e1.prefix(L) : e1.suffix(L)).str();
            (r ? rep.failures_after_fix : rep.unmatched_failures).push_back(what);
        }
    };

    const std::size_t N = P.size();
    for (std::size_t W : window_lengths) {
        if (W < 71)
            throw std::invalid_argument("verify_boundary_exhaustion: windows must have length at least 71");
        for (std::size_t s = 0; s + W + 2 <= N; ++s) {
            // Case I prefix: w starts at s with P[s+1] = d.
            if (s + 1 < N && P[s + 1] == ld) {
                const Word raw = P.substr(s, W);
                for (const auto& pm : all) {
                    if (pm(P[s]) != la)
                        continue;
                    const Word e = eta(detail::perm4(raw, pm)).word;
                    examine(CaseTag::I, Side::prefix, e, e);
                }
            }
            // Case I / II(a) suffix: w ends at s + W - 1, preceded by d.
            if (P[s + W - 2] == ld) {
                const Word raw = P.substr(s, W);
                const Letter y = P[s + W - 1];
                for (const auto& pm : all) {
                    const Letter t = pm(y);
                    const Word e = eta(detail::perm4(raw, pm)).word;
                    if (t == la || t == lb)
                        examine(CaseTag::I, Side::suffix, e, e);
                    if (t == la || t == lc)
                        examine(CaseTag::IIa, Side::suffix, e, e);
                }
            }
            // Case II(a) prefix: P[s+2] = d, α → a, β → b.
            if (P[s + 2] == ld) {
                const auto pm = detail::fix_d_perm({{P[s], la}, {P[s + 1], lb}});
                const Word e = eta(detail::perm4(P.substr(s, W), pm)).word;
                examine(CaseTag::IIa, Side::prefix, e, e);
            }
            // Case II(b1) prefix: ẇ starts at s + 1 with P[s+2] = d; ẅ starts at s.
            if (P[s + 2] == ld) {
                const auto pm = detail::fix_d_perm({{P[s], la}, {P[s + 1], lb}});
                const Word dot = detail::perm4(P.substr(s + 1, W - 1), pm);
                const Word ddot = detail::perm4(P.substr(s, W + 1), pm);
                examine(CaseTag::IIb1, Side::prefix, eta(dot).word,
                        eta(detail::perm4(ddot, perms::pi())).word);
            }
            // Case II(b1) suffix: ẇ ends at s + W - 1 with d y before z = P[s+W]; ẅ ends at s + W.
            if (P[s + W - 2] == ld) {
                const auto pm = detail::fix_d_perm({{P[s + W - 1], lb}, {P[s + W], la}});
                const Word dot = detail::perm4(P.substr(s + 1, W - 1), pm);
                const Word ddot = detail::perm4(P.substr(s, W + 1), pm);
                examine(CaseTag::IIb1, Side::suffix, eta(dot).word,
                        eta(detail::perm4(ddot, perms::pi())).word);
            }
        }
    }
    std::set<std::string> ids;
    for (const auto& r : boundary_rules())
        ids.insert(detail::base_rule_id(r.id));
    for (const auto& id : ids) {
        const auto it = hits.find(id);
        const std::size_t c = it == hits.end() ? 0 : it->second.size();
        rep.rule_hits[id] = c;
        if (c == 0)
            rep.unused_rules.push_back(id);
    }
    return rep;
}

} // namespace circrep
