#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "ring.hpp"

namespace algsub::uni {

/// Dense univariate polynomial over F_p with machine-word coefficients.
/// c[i] holds the coefficient of degree i; the zero polynomial is empty.
/// The modulus is passed explicitly to every operation; p < 2^16 keeps all
/// products inside 64 bits.
struct UniPoly {
    std::vector<long long> c;
};

inline bool is_zero(const UniPoly& f) { return f.c.empty(); }
inline long long degree(const UniPoly& f) { return static_cast<long long>(f.c.size()) - 1; }

inline void trim(UniPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

inline UniPoly from_coeffs(std::vector<long long> c, long long p) {
    for (auto& v : c) {
        v %= p;
        if (v < 0) v += p;
    }
    UniPoly f{std::move(c)};
    trim(f);
    return f;
}

inline UniPoly constant(long long v, long long p) { return from_coeffs({v}, p); }

inline UniPoly add(const UniPoly& f, const UniPoly& g, long long p) {
    UniPoly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) r.c[i] = (r.c[i] + g.c[i]) % p;
    trim(r);
    return r;
}

inline UniPoly sub(const UniPoly& f, const UniPoly& g, long long p) {
    UniPoly r;
    r.c.resize(std::max(f.c.size(), g.c.size()), 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) r.c[i] = f.c[i];
    for (std::size_t i = 0; i < g.c.size(); ++i) r.c[i] = ((r.c[i] - g.c[i]) % p + p) % p;
    trim(r);
    return r;
}

inline UniPoly mul(const UniPoly& f, const UniPoly& g, long long p) {
    if (is_zero(f) || is_zero(g)) return {};
    UniPoly r;
    r.c.assign(f.c.size() + g.c.size() - 1, 0);
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        for (std::size_t j = 0; j < g.c.size(); ++j) r.c[i + j] = (r.c[i + j] + f.c[i] * g.c[j]) % p;
    }
    trim(r);
    return r;
}

inline long long mod_inverse(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("mod_inverse: zero");
    long long r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    t0 %= p;
    if (t0 < 0) t0 += p;
    return t0;
}

inline UniPoly scale(const UniPoly& f, long long s, long long p) {
    s %= p;
    if (s < 0) s += p;
    if (s == 0) return {};
    UniPoly r = f;
    for (auto& v : r.c) v = v * s % p;
    return r;
}

struct DivModResult {
    UniPoly quotient;
    UniPoly remainder;
};

inline DivModResult divmod(const UniPoly& f, const UniPoly& g, long long p) {
    if (is_zero(g)) throw std::domain_error("unipoly divmod: division by zero");
    UniPoly r = f;
    UniPoly q;
    const long long dg = degree(g);
    const long long lead_inv = mod_inverse(g.c.back(), p);
    if (degree(r) >= dg) q.c.assign(static_cast<std::size_t>(degree(r) - dg) + 1, 0);
    while (degree(r) >= dg) {
        const long long k = degree(r) - dg;
        const long long t = r.c.back() * lead_inv % p;
        q.c[static_cast<std::size_t>(k)] = t;
        for (long long i = 0; i <= dg; ++i) {
            auto& cell = r.c[static_cast<std::size_t>(k + i)];
            cell = ((cell - t * g.c[static_cast<std::size_t>(i)]) % p + p) % p;
        }
        trim(r);
    }
    trim(q);
    return {std::move(q), std::move(r)};
}

/// Exact division; throws if the remainder is nonzero.
inline UniPoly exact_div(const UniPoly& f, const UniPoly& g, long long p) {
    auto [q, r] = divmod(f, g, p);
    if (!is_zero(r)) throw std::logic_error("unipoly exact_div: nonzero remainder");
    return q;
}

inline UniPoly make_monic(const UniPoly& f, long long p) {
    if (is_zero(f)) return f;
    return scale(f, mod_inverse(f.c.back(), p), p);
}

/// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b, long long p) {
    while (!is_zero(b)) {
        UniPoly r = divmod(a, b, p).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

inline bool equal(const UniPoly& f, const UniPoly& g) { return f.c == g.c; }

// --- conversions against the sparse bivariate representation ---------------

/// View a Laurent polynomial living on the X-axis as t^offset * poly(t).
/// Requires all exponents to satisfy y == 0. Zero maps to (zero, 0).
inline std::pair<UniPoly, long long> from_laurent_x(const LaurentPoly& f) {
    if (f.is_zero()) return {{}, 0};
    if (!f.is_univariate_x()) throw std::invalid_argument("from_laurent_x: polynomial has Y terms");
    const long long lo = f.min_x();
    UniPoly r;
    r.c.assign(static_cast<std::size_t>(f.max_x() - lo) + 1, 0);
    for (const auto& [e, c] : f.terms())
        r.c[static_cast<std::size_t>(e.x - lo)] = c.convert_to<long long>();
    return {std::move(r), lo};
}

inline LaurentPoly to_laurent_x(const UniPoly& f, long long offset, RingSpec ring) {
    LaurentPoly out(ring);
    for (std::size_t i = 0; i < f.c.size(); ++i)
        if (f.c[i] != 0) out.add_term({offset + static_cast<long long>(i), 0}, f.c[i]);
    return out;
}

inline LaurentPoly to_laurent_y(const UniPoly& f, long long offset, RingSpec ring) {
    LaurentPoly out(ring);
    for (std::size_t i = 0; i < f.c.size(); ++i)
        if (f.c[i] != 0) out.add_term({0, offset + static_cast<long long>(i)}, f.c[i]);
    return out;
}

}  // namespace algsub::uni
