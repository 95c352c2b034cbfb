#pragma once

// Shared generators for the property tests. Every generator takes an explicit
// engine so each test pins its own seed.

#include <random>
#include <string>
#include <vector>

#include "framedef/cyclo.hpp"
#include "framedef/trunc_series.hpp"

namespace testsupport {

using Rng = std::mt19937_64;

inline long long uniform(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

inline framedef::Rational random_rational(Rng& rng, long long bound = 9) {
    return {uniform(rng, -bound, bound), uniform(rng, 1, bound)};
}

/// Random element of Q(zeta8); roughly a quarter of the coordinates are zero.
inline framedef::CycloElem random_cyclo(Rng& rng, long long bound = 9) {
    framedef::Rational c[4];
    for (auto& x : c) x = uniform(rng, 0, 3) == 0 ? framedef::Rational(0) : random_rational(rng, bound);
    return {c[0], c[1], c[2], c[3]};
}

inline framedef::CycloElem random_nonzero_cyclo(Rng& rng, long long bound = 9) {
    framedef::CycloElem a;
    while (a.is_zero()) a = random_cyclo(rng, bound);
    return a;
}

/// Random element of valuation exactly 0.
inline framedef::CycloElem random_integral_unit(Rng& rng) {
    while (true) {
        framedef::CycloElem a = random_cyclo(rng, 5);
        if (framedef::is_integral_unit(a)) return a;
    }
}

/// Random polynomial with `nterms` terms of degree <= maxdeg in the given ring.
inline framedef::SparsePoly<framedef::CycloElem> random_poly(Rng& rng, const framedef::VarSetPtr& vars,
                                                              int nterms, unsigned maxdeg) {
    using P = framedef::SparsePoly<framedef::CycloElem>;
    std::vector<P::Term> terms;
    for (int k = 0; k < nterms; ++k) {
        std::vector<unsigned> e(vars->size(), 0);
        auto deg = static_cast<unsigned>(uniform(rng, 0, maxdeg));
        for (unsigned d = 0; d < deg; ++d) e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(vars->size()) - 1))]++;
        terms.emplace_back(framedef::Monomial::from_exponents(e), random_cyclo(rng, 5));
    }
    return P::from_terms(vars, std::move(terms));
}

}  // namespace testsupport
