#pragma once

// Test-only oracle: decides whether two proper bivariate polynomials over F_p
// share a factor of positive X-degree, via a primitive pseudo-remainder
// sequence in F_p[Y][X]. Deliberately independent of the library's
// elimination code: dense representation, pseudo-division instead of
// fraction-field arithmetic.

#include <vector>

#include <algsub/laurent.hpp>

namespace oracle {

using YPoly = std::vector<long long>;  // dense in Y, index = degree
using XPoly = std::vector<YPoly>;      // dense in X, index = degree

inline void ytrim(YPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline bool yzero(const YPoly& f) { return f.empty(); }

inline YPoly ymul(const YPoly& a, const YPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    YPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ytrim(r);
    return r;
}

inline YPoly ysub(const YPoly& a, const YPoly& b, long long p) {
    YPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    ytrim(r);
    return r;
}

inline long long yinv(long long a, long long p) {
    long long r0 = p, r1 = a % p, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    return ((t0 % p) + p) % p;
}

inline YPoly yrem(YPoly a, const YPoly& b, long long p) {
    const long long inv = yinv(b.back(), p);
    while (a.size() >= b.size()) {
        const long long t = a.back() * inv % p;
        const std::size_t k = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = ((a[k + i] - t * b[i]) % p + p) % p;
        ytrim(a);
        if (a.empty()) break;
    }
    return a;
}

inline YPoly ygcd(YPoly a, YPoly b, long long p) {
    ytrim(a);
    ytrim(b);
    while (!b.empty()) {
        YPoly r = yrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline YPoly yexact_div(const YPoly& a, const YPoly& b, long long p) {
    // long division known to be exact here (content removal)
    YPoly r = a, q;
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, 0);
    const long long inv = yinv(b.back(), p);
    while (r.size() >= b.size()) {
        const long long t = r.back() * inv % p;
        const std::size_t k = r.size() - b.size();
        q[k] = t;
        for (std::size_t i = 0; i < b.size(); ++i) r[k + i] = ((r[k + i] - t * b[i]) % p + p) % p;
        ytrim(r);
        if (r.empty()) break;
    }
    return q;
}

inline void xtrim(XPoly& f) {
    while (!f.empty() && yzero(f.back())) f.pop_back();
}

inline XPoly primitive(XPoly f, long long p) {
    xtrim(f);
    if (f.empty()) return f;
    YPoly content;
    for (const auto& c : f) content = ygcd(content, c, p);
    if (content.size() <= 1) return f;  // constant content: nothing to strip
    for (auto& c : f) {
        if (!yzero(c)) c = yexact_div(c, content, p);
    }
    return f;
}

/// Pseudo-remainder of a by b (multiply a by lc(b) once per reduction step).
inline XPoly prem(XPoly a, const XPoly& b, long long p) {
    xtrim(a);
    const YPoly& lcb = b.back();
    while (a.size() >= b.size()) {
        const YPoly lead = a.back();
        const std::size_t k = a.size() - b.size();
        // a = a*lcb - b*lead*X^k
        for (auto& c : a) c = ymul(c, lcb, p);
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = ysub(a[k + i], ymul(b[i], lead, p), p);
        xtrim(a);
        if (a.empty()) break;
    }
    return a;
}

inline XPoly from_laurent(const algsub::LaurentPoly& f) {
    XPoly out;
    for (const auto& [e, c] : f.terms()) {
        if (static_cast<long long>(out.size()) <= e.x) out.resize(static_cast<std::size_t>(e.x) + 1);
        YPoly& col = out[static_cast<std::size_t>(e.x)];
        if (static_cast<long long>(col.size()) <= e.y) col.resize(static_cast<std::size_t>(e.y) + 1, 0);
        col[static_cast<std::size_t>(e.y)] = c.convert_to<long long>();
    }
    xtrim(out);
    return out;
}

/// True when f and g (proper polynomials over F_p) have a common factor of
/// positive degree in X, i.e. a nonconstant gcd over the rational-function
/// field F_p(Y).
inline bool common_x_factor(const algsub::LaurentPoly& f, const algsub::LaurentPoly& g) {
    const long long p = f.ring().characteristic();
    XPoly a = primitive(from_laurent(f), p);
    XPoly b = primitive(from_laurent(g), p);
    if (a.empty() || b.empty()) return false;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        XPoly r = primitive(prem(a, b, p), p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() >= 2;  // X-degree >= 1
}

}  // namespace oracle
