#pragma once

// Seeded generators for randomized checks.

#include <cstdint>
#include <random>

#include "freycond/gf2k.hpp"
#include "freycond/hyperelliptic.hpp"
#include "freycond/rational.hpp"

namespace freycond::gen {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rat rational(Rng& rng, long bound = 9) { return Rat(uniform(rng, -bound, bound), uniform(rng, 1, bound)); }

inline Rat nonzero_rational(Rng& rng, long bound = 9) {
    for (;;)
        if (Rat q = rational(rng, bound); !q.is_zero()) return q;
}

/// Exact degree deg (deg < 0 gives zero).
inline Poly<Rat> polynomial(Rng& rng, int deg, long bound = 9) {
    if (deg < 0) return {};
    std::vector<Rat> c;
    for (int i = 0; i < deg; ++i) c.push_back(rational(rng, bound));
    c.push_back(nonzero_rational(rng, bound));
    return Poly<Rat>(std::move(c));
}

/// A nonsingular equation of genus g with either parity of deg R.
inline HyperEq<Rat> hyper_equation(Rng& rng, int g) {
    for (;;) {
        const int degP = static_cast<int>(uniform(rng, 2 * g + 1, 2 * g + 2));
        const int degQ = static_cast<int>(uniform(rng, -1, g + 1));
        HyperEq<Rat> e(polynomial(rng, degQ, 5), polynomial(rng, degP, 5), g);
        if (!e.in_window()) continue;
        const int n = e.R().degree();
        if (n != 2 * g + 1 && n != 2 * g + 2) continue;
        if (!hyper_discriminant(e).is_zero()) return e;
    }
}

inline MobiusChange<Rat> change(Rng& rng, int g) {
    MobiusChange<Rat> m;
    do {
        m.a = Rat(uniform(rng, -3, 3));
        m.b = Rat(uniform(rng, -3, 3));
        m.c = Rat(uniform(rng, -2, 2));
        m.d = Rat(uniform(rng, -3, 3));
    } while (m.det().is_zero());
    m.e = nonzero_rational(rng, 4);
    m.R = polynomial(rng, static_cast<int>(uniform(rng, -1, g + 1)), 4);
    return m;
}

struct LawTally {
    int trials = 0;
    int passed = 0;
    bool ok() const { return trials == passed; }
};

/// Delta(E') = e^{-4(2g+1)} (ad-bc)^{2(g+1)(2g+1)} Delta(E) on random pairs.
inline LawTally change_law_trials(std::uint64_t seed, int trials, int gmin, int gmax) {
    Rng rng(seed);
    LawTally t;
    while (t.trials < trials) {
        const int g = static_cast<int>(uniform(rng, gmin, gmax));
        const HyperEq<Rat> E = hyper_equation(rng, g);
        const MobiusChange<Rat> m = change(rng, g);
        ChangeResult<Rat> res;
        try {
            res = apply_change(E, m);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::DegreeViolation) continue;  // pole at infinity of higher order
            throw;
        }
        ++t.trials;
        if (hyper_discriminant(res.eq) == res.disc_factor * hyper_discriminant(E)) ++t.passed;
    }
    return t;
}

inline GF2Elem field_element(Rng& rng, const GF2k& F) {
    return F.element(static_cast<std::uint32_t>(uniform(rng, 0, (1L << F.k()) - 1)));
}

inline GF2Poly gf2_polynomial(Rng& rng, const GF2k& F, int max_deg) {
    std::vector<GF2Elem> c;
    for (int i = 0; i <= max_deg; ++i) c.push_back(field_element(rng, F));
    return GF2Poly(std::move(c));
}

}  // namespace freycond::gen
