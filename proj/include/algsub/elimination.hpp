#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "unipoly.hpp"

namespace algsub {

enum class Axis { X, Y };

inline const char* to_string(Axis a) { return a == Axis::X ? "X" : "Y"; }

/// Thrown when an elimination routine requires coprime inputs but finds a
/// common factor.
class CommonFactorError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Variable elimination certificate: alpha*f + beta*g = relation, with the
/// relation nonzero and univariate in the non-eliminated variable. The
/// resultant field holds the Sylvester determinant of the proper normal
/// forms; it vanishes exactly when f and g share a factor of positive degree
/// in the eliminated variable. The relation is an associate of the resultant
/// up to a polynomial multiple; downstream uses consume only "zero vs
/// nonzero + univariate".
struct EliminationResult {
    Axis axis;
    LaurentPoly resultant;
    LaurentPoly alpha;
    LaurentPoly beta;
    LaurentPoly relation;
};

namespace detail {

inline LaurentPoly transpose_vars(const LaurentPoly& f) {
    return unimodular_change(f, Mat2{0, 1, 1, 0});
}

/// Clear negative exponents only: f = X^s.x Y^s.y * proper. Unlike
/// monomial_normal_form this keeps already-proper polynomials untouched, the
/// convention under which resultants of proper inputs match the classical
/// Sylvester determinant.
struct ProperForm {
    LaurentPoly proper;
    ExpVec shift;
};

inline ProperForm proper_form(const LaurentPoly& f) {
    const ExpVec shift{std::min(f.min_x(), 0LL), std::min(f.min_y(), 0LL)};
    if (shift.x == 0 && shift.y == 0) return {f, shift};
    LaurentPoly proper(f.ring());
    for (const auto& [e, c] : f.terms()) proper.add_term(e - shift, c);
    return {std::move(proper), shift};
}

/// Coefficients of a proper polynomial viewed in X: result[k] is the
/// univariate Y-polynomial multiplying X^k.
inline std::vector<uni::UniPoly> x_coefficients(const LaurentPoly& f) {
    std::vector<uni::UniPoly> out(static_cast<std::size_t>(f.max_x()) + 1);
    for (const auto& [e, c] : f.terms()) {
        auto& row = out[static_cast<std::size_t>(e.x)].c;
        if (static_cast<long long>(row.size()) <= e.y) row.resize(static_cast<std::size_t>(e.y) + 1, 0);
        row[static_cast<std::size_t>(e.y)] = c.convert_to<long long>();
    }
    for (auto& up : out) uni::trim(up);
    return out;
}

/// Fraction-free Bareiss determinant of a matrix over F_p[Y].
inline uni::UniPoly bareiss_determinant(std::vector<std::vector<uni::UniPoly>> m, long long p) {
    const std::size_t n = m.size();
    if (n == 0) return uni::constant(1, p);
    bool negate = false;
    uni::UniPoly prev = uni::constant(1, p);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (uni::is_zero(m[k][k])) {
            std::size_t r = k + 1;
            while (r < n && uni::is_zero(m[r][k])) ++r;
            if (r == n) return {};
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                const uni::UniPoly num =
                    uni::sub(uni::mul(m[i][j], m[k][k], p), uni::mul(m[i][k], m[k][j], p), p);
                m[i][j] = uni::exact_div(num, prev, p);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    uni::UniPoly det = m[n - 1][n - 1];
    if (negate) det = uni::scale(det, p - 1, p);
    return det;
}

}  // namespace detail

/// Sylvester resultant of f and g in the eliminated variable, after clearing
/// negative exponents to proper polynomials; univariate in the other variable.
inline LaurentPoly resultant(const LaurentPoly& f, const LaurentPoly& g, Axis axis) {
    require_same_ring(f.ring(), g.ring(), "resultant");
    if (!f.ring().is_field()) throw std::invalid_argument("resultant: field ring required");
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero input");
    if (axis == Axis::Y)
        return detail::transpose_vars(resultant(detail::transpose_vars(f), detail::transpose_vars(g), Axis::X));

    const long long p = f.ring().characteristic();
    const LaurentPoly fn = detail::proper_form(f).proper;
    const LaurentPoly gn = detail::proper_form(g).proper;
    const auto fa = detail::x_coefficients(fn);
    const auto ga = detail::x_coefficients(gn);
    const std::size_t m = fa.size() - 1;
    const std::size_t n = ga.size() - 1;

    std::vector<std::vector<uni::UniPoly>> s(m + n, std::vector<uni::UniPoly>(m + n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = fa[m - k];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = ga[n - k];

    return uni::to_laurent_y(detail::bareiss_determinant(std::move(s), p), 0, f.ring());
}

namespace detail {

/// Rational function over F_p[Y], kept reduced with a monic denominator.
struct Frac {
    uni::UniPoly num;
    uni::UniPoly den;  // monic, nonzero
};

inline Frac frac_make(uni::UniPoly num, uni::UniPoly den, long long p) {
    if (uni::is_zero(den)) throw std::domain_error("Frac: zero denominator");
    if (uni::is_zero(num)) return {{}, uni::constant(1, p)};
    const uni::UniPoly g = uni::gcd(num, den, p);
    num = uni::exact_div(num, g, p);
    den = uni::exact_div(den, g, p);
    const long long inv = uni::mod_inverse(den.c.back(), p);
    return {uni::scale(num, inv, p), uni::scale(den, inv, p)};
}

inline Frac frac_zero(long long p) { return {{}, uni::constant(1, p)}; }
inline Frac frac_of(uni::UniPoly f, long long p) { return {std::move(f), uni::constant(1, p)}; }
inline bool frac_is_zero(const Frac& a) { return uni::is_zero(a.num); }

inline Frac frac_add(const Frac& a, const Frac& b, long long p) {
    return frac_make(uni::add(uni::mul(a.num, b.den, p), uni::mul(b.num, a.den, p), p),
                     uni::mul(a.den, b.den, p), p);
}

inline Frac frac_sub(const Frac& a, const Frac& b, long long p) {
    return frac_make(uni::sub(uni::mul(a.num, b.den, p), uni::mul(b.num, a.den, p), p),
                     uni::mul(a.den, b.den, p), p);
}

inline Frac frac_mul(const Frac& a, const Frac& b, long long p) {
    return frac_make(uni::mul(a.num, b.num, p), uni::mul(a.den, b.den, p), p);
}

inline Frac frac_div(const Frac& a, const Frac& b, long long p) {
    if (frac_is_zero(b)) throw std::domain_error("Frac: division by zero");
    return frac_make(uni::mul(a.num, b.den, p), uni::mul(a.den, b.num, p), p);
}

/// Dense polynomial in X with rational-function coefficients; index = degree.
using XPoly = std::vector<Frac>;

inline void xp_trim(XPoly& f) {
    while (!f.empty() && frac_is_zero(f.back())) f.pop_back();
}

inline bool xp_is_zero(const XPoly& f) { return f.empty(); }
inline long long xp_degree(const XPoly& f) { return static_cast<long long>(f.size()) - 1; }

inline XPoly xp_sub(const XPoly& a, const XPoly& b, long long p) {
    XPoly r = a;
    if (r.size() < b.size()) r.resize(b.size(), frac_zero(p));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = frac_sub(r[i], b[i], p);
    xp_trim(r);
    return r;
}

inline XPoly xp_mul(const XPoly& a, const XPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    XPoly r(a.size() + b.size() - 1, frac_zero(p));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = frac_add(r[i + j], frac_mul(a[i], b[j], p), p);
    xp_trim(r);
    return r;
}

inline XPoly xp_divide(const XPoly& a, const XPoly& b, long long p) {
    if (xp_is_zero(b)) throw std::domain_error("XPoly: division by zero");
    XPoly r = a;
    xp_trim(r);
    XPoly q;
    if (xp_degree(r) >= xp_degree(b)) q.assign(r.size() - b.size() + 1, frac_zero(p));
    while (!xp_is_zero(r) && xp_degree(r) >= xp_degree(b)) {
        const std::size_t k = r.size() - b.size();
        const Frac t = frac_div(r.back(), b.back(), p);
        q[k] = t;
        for (std::size_t i = 0; i < b.size(); ++i) r[k + i] = frac_sub(r[k + i], frac_mul(t, b[i], p), p);
        xp_trim(r);
    }
    xp_trim(q);
    return q;
}

inline XPoly xpoly_of(const LaurentPoly& proper, long long p) {
    XPoly out;
    for (const auto& up : x_coefficients(proper)) out.push_back(frac_of(up, p));
    xp_trim(out);
    return out;
}

inline uni::UniPoly content_y(const LaurentPoly& proper, long long p) {
    uni::UniPoly g;
    for (const auto& up : x_coefficients(proper)) g = uni::gcd(g, up, p);
    return g;
}

inline uni::UniPoly lcm(const uni::UniPoly& a, const uni::UniPoly& b, long long p) {
    if (uni::is_zero(a) || uni::is_zero(b)) return {};
    return uni::make_monic(uni::exact_div(uni::mul(a, b, p), uni::gcd(a, b, p), p), p);
}

}  // namespace detail

/// Extended Euclid in the eliminated variable over the rational-function
/// field of the other variable, denominators cleared. Throws
/// CommonFactorError when f and g share a nonconstant factor.
inline EliminationResult bezout_cofactors(const LaurentPoly& f, const LaurentPoly& g, Axis axis) {
    require_same_ring(f.ring(), g.ring(), "bezout_cofactors");
    if (!f.ring().is_field()) throw std::invalid_argument("bezout_cofactors: field ring required");
    if (f.is_zero() || g.is_zero()) throw std::domain_error("bezout_cofactors: zero input");
    if (axis == Axis::Y) {
        EliminationResult r =
            bezout_cofactors(detail::transpose_vars(f), detail::transpose_vars(g), Axis::X);
        return {Axis::Y, detail::transpose_vars(r.resultant), detail::transpose_vars(r.alpha),
                detail::transpose_vars(r.beta), detail::transpose_vars(r.relation)};
    }

    const long long p = f.ring().characteristic();
    const auto nf = detail::proper_form(f);
    const auto ng = detail::proper_form(g);

    // a common factor free of the eliminated variable divides both contents
    const uni::UniPoly common_content =
        uni::gcd(detail::content_y(nf.proper, p), detail::content_y(ng.proper, p), p);
    if (uni::degree(common_content) >= 1)
        throw CommonFactorError("bezout_cofactors: common factor " +
                                to_string(uni::to_laurent_y(common_content, 0, f.ring())));

    detail::XPoly r0 = detail::xpoly_of(nf.proper, p);
    detail::XPoly r1 = detail::xpoly_of(ng.proper, p);
    detail::XPoly s0{detail::frac_of(uni::constant(1, p), p)}, s1;
    detail::XPoly t0, t1{detail::frac_of(uni::constant(1, p), p)};
    while (!detail::xp_is_zero(r1)) {
        const detail::XPoly q = detail::xp_divide(r0, r1, p);
        detail::XPoly r2 = detail::xp_sub(r0, detail::xp_mul(q, r1, p), p);
        detail::XPoly s2 = detail::xp_sub(s0, detail::xp_mul(q, s1, p), p);
        detail::XPoly t2 = detail::xp_sub(t0, detail::xp_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (detail::xp_degree(r0) >= 1)
        throw CommonFactorError("bezout_cofactors: nonconstant gcd in the eliminated variable");
    if (detail::xp_is_zero(r0)) throw std::logic_error("bezout_cofactors: zero gcd from nonzero inputs");

    // s0*fn + t0*gn = d with d = num/den constant in X; multiply through by
    // den and the lcm of all remaining coefficient denominators
    const detail::Frac d = r0.front();
    uni::UniPoly clear = d.den;
    for (const auto& fr : s0) clear = detail::lcm(clear, fr.den, p);
    for (const auto& fr : t0) clear = detail::lcm(clear, fr.den, p);

    const auto assemble = [&](const detail::XPoly& xs) {
        LaurentPoly out(f.ring());
        for (std::size_t k = 0; k < xs.size(); ++k) {
            const uni::UniPoly coeff = uni::mul(xs[k].num, uni::exact_div(clear, xs[k].den, p), p);
            for (std::size_t j = 0; j < coeff.c.size(); ++j)
                if (coeff.c[j] != 0)
                    out.add_term({static_cast<long long>(k), static_cast<long long>(j)}, coeff.c[j]);
        }
        return out;
    };

    LaurentPoly alpha = assemble(s0);
    LaurentPoly beta = assemble(t0);
    const LaurentPoly relation =
        uni::to_laurent_y(uni::mul(d.num, uni::exact_div(clear, d.den, p), p), 0, f.ring());

    // undo the exponent shifts so the identity holds for the original inputs
    alpha.scale(Int(1), -nf.shift);
    beta.scale(Int(1), -ng.shift);

    if (!(alpha * f + beta * g == relation))
        throw std::logic_error("bezout_cofactors: cofactor identity failed to verify");

    return {axis, resultant(f, g, Axis::X), std::move(alpha), std::move(beta), relation};
}

/// True when f and g share no nonconstant common factor in the Laurent sense
/// (monomials are units and do not count): both Sylvester resultants of the
/// fully monomial-normalized forms are nonzero.
inline bool laurent_coprime(const LaurentPoly& f, const LaurentPoly& g) {
    const LaurentPoly fn = monomial_normal_form(f).proper;
    const LaurentPoly gn = monomial_normal_form(g).proper;
    return !resultant(fn, gn, Axis::X).is_zero() && !resultant(fn, gn, Axis::Y).is_zero();
}

/// Both one-variable combinations of a coprime annihilator pair: eliminating
/// X yields a nonzero polynomial in Y only, and symmetrically. Any
/// configuration annihilated by f and g is annihilated by both relations.
/// Inputs are monomial-normalized first (units never block elimination, and
/// annihilation is preserved); the cofactor identities hold for the
/// normalized forms.
struct CoprimePeriodicityResult {
    EliminationResult x_eliminated;  // relation univariate in Y
    EliminationResult y_eliminated;  // relation univariate in X
};

inline CoprimePeriodicityResult coprime_periodicity(const LaurentPoly& f, const LaurentPoly& g) {
    const LaurentPoly fn = monomial_normal_form(f).proper;
    const LaurentPoly gn = monomial_normal_form(g).proper;
    return {bezout_cofactors(fn, gn, Axis::X), bezout_cofactors(fn, gn, Axis::Y)};
}

}  // namespace algsub
