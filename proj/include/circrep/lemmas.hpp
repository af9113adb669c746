#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "circrep/cuts.hpp"
#include "circrep/decompose.hpp"
#include "circrep/morphism.hpp"
#include "circrep/morphism_lemmas.hpp"
#include "circrep/pansiot.hpp"
#include "circrep/pansiot_cases.hpp"
#include "circrep/search.hpp"

namespace circrep {

struct SuiteOptions {
    bool deep = false;              // d-family: preservation up to length 22 instead of 10
    std::size_t pansiot_length = 10000;
    std::size_t bookend_max = 2000;
    std::size_t eta_length = 1500;
    std::size_t boundary_length = 100000;
    std::size_t preimage_samples = 10000;
    std::uint64_t seed = default_seed;
};

namespace detail {

class ClaimRecorder {
public:
    explicit ClaimRecorder(std::string subject) { rep_.subject = std::move(subject); }

    void check(const std::string& name, const std::function<bool(std::string&)>& body)
    {
        const auto t0 = std::chrono::steady_clock::now();
        Claim c;
        c.name = name;
        try {
            c.pass = body(c.detail);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!c.detail.empty())
            c.detail += "; ";
        c.detail += std::to_string(s).substr(0, 6) + " s";
        rep_.claims.push_back(std::move(c));
    }

    void merge(const ClaimReport& sub)
    {
        for (const auto& c : sub.claims)
            rep_.claims.push_back(Claim{sub.subject + ": " + c.name, c.pass, c.detail});
    }

    ClaimReport take() { return std::move(rep_); }

private:
    ClaimReport rep_;
};

/// Samples factors of length >= min_len from mixed images of random source
/// words and checks that each has a cut and exactly one preimage.
inline bool sampled_preimage_uniqueness(const MorphismFamily& fam, std::size_t min_len, std::size_t samples,
                                        std::uint64_t seed, std::string& detail)
{
    std::mt19937_64 rng(seed);
    const unsigned k = fam.source_alphabet();
    const std::size_t members = fam.members().size();
    for (std::size_t t = 0; t < samples; ++t) {
        std::vector<Letter> src(6);
        std::vector<std::size_t> sel(src.size());
        for (std::size_t i = 0; i < src.size(); ++i) {
            src[i] = static_cast<Letter>(rng() % k);
            sel[i] = rng() % members;
        }
        const Word img = fam.mixed_image(Word(src, k), sel);
        const std::size_t len = min_len + rng() % 30;
        const Word u = img.substr(rng() % (img.size() - len + 1), len);
        if (find_cuts(u, fam).empty()) {
            detail = "no cut in " + u.str();
            return false;
        }
        if (const auto n = h_preimages(u, fam).size(); n != 1) {
            detail = std::to_string(n) + " preimages of " + u.str();
            return false;
        }
    }
    detail = std::to_string(samples) + " factors";
    return true;
}

inline std::string counterexample_note(const Word& w) { return w.empty() ? "" : "counterexample " + w.str(); }

} // namespace detail

inline ClaimReport suite_f_family(const SuiteOptions& o = {})
{
    const auto& F = morphisms::family_F();
    const Ratio beta = thresholds::three_halves;
    detail::ClaimRecorder r("f-family");
    r.merge(verify_code_properties(F));
    r.check("every factor of length >= 10 has a cut", [&](std::string& d) {
        Word w;
        const bool ok = check_cut_threshold(F, 10, &w);
        d = detail::counterexample_note(w);
        return ok;
    });
    r.check("sampled cut-bearing factors have a unique preimage", [&](std::string& d) {
        return detail::sampled_preimage_uniqueness(F, 10, o.preimage_samples, o.seed, d);
    });
    for (const auto* m : {&morphisms::f9(), &morphisms::f11()})
        r.check(m->name() + " preserves 3/2+-freeness on words of length <= 4", [&](std::string& d) {
            Word w;
            const bool ok = check_freeness_preservation(*m, beta, 4, &w);
            d = detail::counterexample_note(w);
            return ok;
        });
    r.check("mixed images of length-5 sources avoid short 3/2+ powers (|x| <= 10)", [&](std::string& d) {
        Word w;
        const bool ok = check_mixed_preservation_base(F, beta, {{0, 1, 0}, 5, 10}, &w) &&
                        check_mixed_preservation_base(F, beta, {{1, 0, 1}, 5, 10}, &w);
        d = detail::counterexample_note(w);
        return ok;
    });
    return r.take();
}

inline ClaimReport suite_d_family(const SuiteOptions& o = {})
{
    const auto& D = morphisms::family_D();
    const Ratio beta = thresholds::seven_fourths;
    const std::size_t len = o.deep ? 22 : 10;
    detail::ClaimRecorder r("d-family");
    r.merge(verify_code_properties(D));
    r.check("every factor of length >= 22 has a cut", [&](std::string& d) {
        Word w;
        const bool ok = check_cut_threshold(D, 22, &w);
        d = detail::counterexample_note(w);
        return ok;
    });
    r.check("sampled cut-bearing factors have a unique preimage", [&](std::string& d) {
        return detail::sampled_preimage_uniqueness(D, 22, o.preimage_samples, o.seed, d);
    });
    r.check("d23 preserves 7/4+-freeness on words of length <= " + std::to_string(len), [&](std::string& d) {
        Word w;
        const bool ok = check_freeness_preservation(morphisms::d23(), beta, len, &w);
        d = detail::counterexample_note(w);
        return ok;
    });
    return r.take();
}

inline ClaimReport suite_pansiot(const SuiteOptions& o = {})
{
    detail::ClaimRecorder r("pansiot");
    const std::size_t N = o.pansiot_length;
    const Word p = gen_p(N);
    const Word P = gen_P(N);
    r.check("p has no factor 00", [&](std::string& d) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (p[i] == 0 && p[i + 1] == 0) {
                d = "at " + std::to_string(i);
                return false;
            }
        return true;
    });
    r.check("P is 7/5+-free", [&](std::string& d) {
        PowerWitness w;
        if (find_power_above(P.letters(), thresholds::seven_fifths, &w)) {
            d = "power at " + std::to_string(w.start) + " period " + std::to_string(w.period);
            return false;
        }
        return true;
    });
    r.check("every power above 4/3 in P is a letter permutation of T1", [&](std::string& d) {
        const auto ws = scan_high_powers(P, thresholds::four_thirds);
        for (const auto& w : ws) {
            const auto f = P.letters().subspan(w.start, w.length);
            if (!is_letter_permutation_of(f, pansiot::T1().letters())) {
                d = "witness at " + std::to_string(w.start) + " length " + std::to_string(w.length);
                return false;
            }
        }
        d = std::to_string(ws.size()) + " witnesses";
        return !ws.empty();
    });
    r.check("P is (14/11+, 11)-free", [&](std::string&) {
        return is_gen_free(P.letters(), thresholds::fourteen_elevenths, 11);
    });
    r.check("occurrences of t1 overlap only as t2 and are otherwise 17 apart", [&](std::string& d) {
        const auto s = scan_t1(p);
        d = std::to_string(s.occurrences.size()) + " occurrences, " + std::to_string(s.overlapping_pairs) +
            " overlapping pairs, min gap " + std::to_string(s.min_gap);
        return s.bad_overlaps == 0 && s.min_gap >= 17 && !s.occurrences.empty();
    });
    r.check("M(mu(uvu)) and M(mu^2(uvu)) stay below 14/11", [&](std::string&) { return check_mu_cases(); });
    r.check("P has a factor of every length 4.." + std::to_string(o.bookend_max) +
                " beginning and ending with the same letter",
            [&](std::string& d) {
                const Word Q = gen_P(std::max<std::size_t>(N, default_scan_bound(o.bookend_max)));
                for (std::size_t n = 4; n <= o.bookend_max; ++n)
                    if (!find_bookend(Q, n, std::nullopt)) {
                        d = "none of length " + std::to_string(n);
                        return false;
                    }
                return true;
            });
    r.check("every length 3.." + std::to_string(o.bookend_max) + " has a d...d factor of length n or n+1",
            [&](std::string& d) {
                for (std::size_t n = 3; n <= o.bookend_max; ++n) {
                    const auto b = bookend_factor(n);
                    if (b.word.size() < n || b.word.size() > n + 1 || b.word[0] != ld ||
                        b.word[b.word.size() - 1] != ld) {
                        d = "bad factor for " + std::to_string(n);
                        return false;
                    }
                }
                return true;
            });
    return r.take();
}

inline ClaimReport suite_eta(const SuiteOptions& o = {})
{
    detail::ClaimRecorder r("eta");
    const Word P = gen_P(o.eta_length);
    std::vector<EtaWord> out;
    for (std::size_t s = 0; s + 100 <= P.size(); s += 50)
        out.push_back(eta(P.substr(s, 100)));
    r.check("eta of length-100 factors is 4/3+-free", [&](std::string& d) {
        d = std::to_string(out.size()) + " factors";
        for (const auto& e : out)
            if (!is_beta_plus_free(e.word, thresholds::four_thirds))
                return false;
        return !out.empty();
    });
    r.check("every length-15 factor has at least two d and at most one e", [&](std::string&) {
        for (const auto& e : out)
            if (!eta_frequency_ok(e.word))
                return false;
        return true;
    });
    r.check("changing e back to d recovers the factor", [&](std::string&) {
        for (const auto& e : out)
            if (!e.erases_to_source())
                return false;
        return true;
    });
    r.check("eta(T1) = abcdbacbdcabce", [&](std::string& d) {
        d = eta(pansiot::T1()).word.str();
        return d == "abcdbacbdcabce";
    });
    return r.take();
}

inline ClaimReport suite_boundary(const SuiteOptions& o = {}, ExhaustionReport* out = nullptr)
{
    detail::ClaimRecorder r("boundary");
    ExhaustionReport rep;
    r.check("realizable boundaries glue to 4/3+-free words after adjustment", [&](std::string& d) {
        rep = verify_boundary_exhaustion(gen_P(o.boundary_length), {71, 100});
        d = std::to_string(rep.boundaries) + " boundaries";
        for (const auto& [k, v] : rep.exceptional)
            d += ", " + k + " " + std::to_string(v);
        for (const auto& f : rep.unmatched_failures)
            d += "; unmatched " + f;
        for (const auto& f : rep.failures_after_fix)
            d += "; still failing " + f;
        return rep.unmatched_failures.empty() && rep.failures_after_fix.empty();
    });
    r.check("every adjustment rule fires", [&](std::string& d) {
        for (const auto& id : rep.unused_rules)
            d += (d.empty() ? "unused " : ", ") + id;
        return rep.unused_rules.empty() && !rep.rule_hits.empty();
    });
    if (out)
        *out = rep;
    return r.take();
}

inline ClaimReport suite_ternary(const SuiteOptions& = {})
{
    detail::ClaimRecorder r("ternary");
    r.check("lengths <= 22 without a 7/4+-free circular ternary word are 5 7 9 10 14 16 17 22",
            [&](std::string& d) {
                const auto rep = prove_ternary_exceptions(22);
                d = "absent:";
                for (auto n : rep.absent)
                    d += " " + std::to_string(n);
                d += ", " + std::to_string(rep.nodes) + " nodes";
                return rep.matches_expected;
            });
    return r.take();
}

inline ClaimReport suite_decomposition(const SuiteOptions& = {})
{
    detail::ClaimRecorder r("decomposition");
    for (auto [a, b] : {std::pair<std::size_t, std::size_t>{9, 11}, {19, 23}}) {
        const std::size_t lo = (a - 1) * (b - 1);
        r.check("unique representation over " + std::to_string(a) + "," + std::to_string(b) + " for n in [" +
                    std::to_string(lo) + ", " + std::to_string(lo + 5000) + "]",
                [&](std::string& d) {
                    for (std::size_t n = lo; n <= lo + 5000; ++n) {
                        const auto dec = decompose(n, a, b);
                        if (count_decompositions(n, a, b) != 1 || dec.r * a + dec.s * b != n || dec.s >= a) {
                            d = "fails at " + std::to_string(n);
                            return false;
                        }
                    }
                    return true;
                });
        r.check("n = (a-1)(b-1) - 1 has no representation", [&](std::string&) {
            return count_decompositions(lo - 1, a, b) == 0;
        });
    }
    return r.take();
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> v{"f-family", "d-family", "pansiot",      "eta",
                                            "boundary", "ternary",  "decomposition"};
    return v;
}

/// Runs a suite by name; throws std::invalid_argument for unknown names.
inline ClaimReport run_suite(const std::string& name, const SuiteOptions& o = {})
{
    if (name == "f-family")
        return suite_f_family(o);
    if (name == "d-family")
        return suite_d_family(o);
    if (name == "pansiot")
        return suite_pansiot(o);
    if (name == "eta")
        return suite_eta(o);
    if (name == "boundary")
        return suite_boundary(o);
    if (name == "ternary")
        return suite_ternary(o);
    if (name == "decomposition")
        return suite_decomposition(o);
    throw std::invalid_argument("unknown suite " + name);
}

} // namespace circrep
