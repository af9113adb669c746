#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "circrep/base_cases.hpp"
#include "circrep/decompose.hpp"
#include "circrep/exponent.hpp"
#include "circrep/morphism.hpp"
#include "circrep/pansiot_cases.hpp"
#include "circrep/search.hpp"

namespace circrep {

struct UnsupportedLength : std::domain_error {
    using std::domain_error::domain_error;
};

struct UnsupportedAlphabet : std::domain_error {
    using std::domain_error::domain_error;
};

struct VerificationFailure : std::logic_error {
    using std::logic_error::logic_error;
};

inline Ratio threshold_for(unsigned k)
{
    switch (k) {
    case 3:
        return thresholds::seven_fourths;
    case 4:
        return thresholds::three_halves;
    case 5:
        return thresholds::four_thirds;
    default:
        throw UnsupportedAlphabet("no construction for alphabet size " + std::to_string(k) + " (supported: 3, 4, 5)");
    }
}

namespace detail {

inline CircularWord verified(const Word& w, std::size_t n, const Ratio& beta, const char* who)
{
    if (w.size() != n)
        throw VerificationFailure(std::string(who) + ": produced length " + std::to_string(w.size()) +
                                  " instead of " + std::to_string(n));
    if (!is_circular_beta_plus_free(w.letters(), beta))
        throw VerificationFailure(std::string(who) + ": word of length " + std::to_string(n) + " is not " +
                                  beta.str() + "+-free");
    return CircularWord(w);
}

inline void require(bool cond, const std::string& what)
{
    if (!cond)
        throw VerificationFailure("recursion invariant violated: " + what);
}

} // namespace detail

/// 3/2⁺-free circular word over Σ4 of length n.
inline CircularWord construct_quaternary(std::size_t n, BaseCaseStore& store = default_store())
{
    if (n == 0)
        throw UnsupportedLength("construct_quaternary: length must be positive");
    const Ratio beta = thresholds::three_halves;
    if (n <= 173)
        return detail::verified(store.get_or_search(4, beta, n), n, beta, "construct_quaternary");
    const auto d = decompose(n - 94, 9, 11);
    const std::size_t k = d.r + 8, l = d.s + 2;
    detail::require(k >= 8 && l >= 2 && l <= 10 && k + l < n, "quaternary k=" + std::to_string(k) +
                                                                   " l=" + std::to_string(l));
    const Word w = construct_quaternary(k + l, store).representative();
    const Word img = morphisms::f9()(w.prefix(k)) + morphisms::f11()(w.suffix(l));
    return detail::verified(img, n, beta, "construct_quaternary");
}

/// 7/4⁺-free circular word over Σ3 of length n >= 23.
inline CircularWord construct_ternary(std::size_t n, BaseCaseStore& store = default_store())
{
    const auto& ex = ternary_exceptional_lengths();
    if (std::find(ex.begin(), ex.end(), n) != ex.end())
        throw UnsupportedLength("no 7/4+-free circular ternary word of length " + std::to_string(n) +
                                " exists (exceptional lengths: 5, 7, 9, 10, 14, 16, 17, 22)");
    if (n < 23)
        throw UnsupportedLength("construct_ternary: lengths below 23 are not covered by the construction "
                                "(exceptional lengths: 5, 7, 9, 10, 14, 16, 17, 22); use search");
    const Ratio beta = thresholds::seven_fourths;
    if (n <= 555)
        return detail::verified(store.get_or_search(3, beta, n), n, beta, "construct_ternary");
    const auto d = decompose(n - 160, 19, 23);
    const std::size_t k = d.r + 6, l = d.s + 2;
    detail::require(k >= 6 && l >= 2 && l <= 20 && k + l >= 23 && k + l < n,
                    "ternary k=" + std::to_string(k) + " l=" + std::to_string(l));
    const Word w = construct_ternary(k + l, store).representative();
    const Word img = morphisms::d19()(w.prefix(k)) + morphisms::d23()(w.suffix(l));
    return detail::verified(img, n, beta, "construct_ternary");
}

/// 4/3⁺-free circular word over A ∪ {e} of length n.
inline CircularWord construct_quinary(std::size_t n, BaseCaseStore& store = default_store())
{
    if (n == 0)
        throw UnsupportedLength("construct_quinary: length must be positive");
    const Ratio beta = thresholds::four_thirds;
    Word w;
    if (n % 2 == 0 && n >= 146)
        w = build_even(n).representative();
    else if (n % 2 == 1 && n >= 1291)
        w = build_odd(n).representative();
    else
        w = store.get_or_search(5, beta, n);
    return detail::verified(w, n, beta, "construct_quinary");
}

inline CircularWord construct(unsigned k, std::size_t n, BaseCaseStore& store = default_store())
{
    switch (k) {
    case 3:
        return construct_ternary(n, store);
    case 4:
        return construct_quaternary(n, store);
    case 5:
        return construct_quinary(n, store);
    default:
        throw UnsupportedAlphabet("no construction for alphabet size " + std::to_string(k) + " (supported: 3, 4, 5)");
    }
}

} // namespace circrep
