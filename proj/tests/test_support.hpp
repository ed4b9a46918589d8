#pragma once

#include <random>
#include <vector>

#include <algsub/laurent.hpp>
#include <algsub/newton.hpp>

namespace testsupport {

using algsub::ExpVec;
using algsub::Int;
using algsub::LaurentPoly;
using algsub::RingSpec;

using Rng = std::mt19937;

inline long long rand_range(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

/// Random polynomial with exponents in [min_exp, max_exp]^2 and 1..max_terms
/// terms; coefficients 1..p-1 for fields, -9..9 nonzero over Z. May collapse
/// to fewer terms by cancellation but is never returned as zero.
inline LaurentPoly random_poly(Rng& rng, RingSpec ring, long long min_exp, long long max_exp,
                               int max_terms) {
    for (;;) {
        LaurentPoly f(ring);
        const int terms = static_cast<int>(rand_range(rng, 1, max_terms));
        for (int t = 0; t < terms; ++t) {
            const ExpVec e{rand_range(rng, min_exp, max_exp), rand_range(rng, min_exp, max_exp)};
            long long c;
            if (ring.is_field())
                c = rand_range(rng, 1, ring.characteristic() - 1);
            else
                do { c = rand_range(rng, -9, 9); } while (c == 0);
            f.add_term(e, c);
        }
        if (!f.is_zero()) return f;
    }
}

/// Random line polynomial with >= 2 terms in the given direction.
inline LaurentPoly random_line_poly(Rng& rng, RingSpec ring, const algsub::Direction& dir,
                                    int max_steps) {
    for (;;) {
        LaurentPoly f(ring);
        const ExpVec base{rand_range(rng, -2, 2), rand_range(rng, -2, 2)};
        const int steps = static_cast<int>(rand_range(rng, 1, max_steps));
        for (int k = 0; k <= steps; ++k) {
            const long long c = ring.is_field() ? rand_range(rng, 0, ring.characteristic() - 1)
                                                : rand_range(rng, -3, 3);
            f.add_term({base.x + k * dir.a(), base.y + k * dir.b()}, c);
        }
        // force both endpoints so the direction is exact
        f.add_term(base, 1);
        f.add_term({base.x + steps * dir.a(), base.y + steps * dir.b()}, 1);
        if (f.term_count() >= 2) return f;
    }
}

}  // namespace testsupport
