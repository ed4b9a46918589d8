#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"
#include "newton.hpp"
#include "unipoly.hpp"

namespace algsub {

/// Direction of a line polynomial: present when the support has >= 2 points
/// and they are collinear.
inline std::optional<Direction> line_direction_of(const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("line_direction_of: zero polynomial");
    const std::vector<ExpVec> pts = f.support();
    if (pts.size() < 2) return std::nullopt;
    const ExpVec base = pts[0];
    const ExpVec d = pts[1] - base;
    for (std::size_t i = 2; i < pts.size(); ++i) {
        const ExpVec v = pts[i] - base;
        if (d.x * v.y - d.y * v.x != 0) return std::nullopt;
    }
    return Direction(d);
}

namespace detail {

/// Rows of a transformed polynomial: for each Y-exponent j the univariate
/// X-part together with its minimal X-exponent.
struct XRow {
    uni::UniPoly poly;
    long long x_offset;
};

inline std::map<long long, XRow> collect_x_rows(const LaurentPoly& f) {
    std::map<long long, std::map<long long, long long>> raw;
    for (const auto& [e, c] : f.terms()) raw[e.y][e.x] = c.convert_to<long long>();
    std::map<long long, XRow> rows;
    for (const auto& [j, xs] : raw) {
        const long long lo = xs.begin()->first;
        const long long hi = xs.rbegin()->first;
        uni::UniPoly up;
        up.c.assign(static_cast<std::size_t>(hi - lo) + 1, 0);
        for (const auto& [i, v] : xs) up.c[static_cast<std::size_t>(i - lo)] = v;
        rows.emplace(j, XRow{std::move(up), lo});
    }
    return rows;
}

}  // namespace detail

/// Maximal factor of f that is a line polynomial in direction u (1 when only
/// a monomial divides). Change coordinates so u becomes (1,0), take the gcd
/// of the X-parts over all Y-levels, and map the result back.
inline LaurentPoly line_content(const LaurentPoly& f, const Direction& u) {
    if (f.is_zero()) throw std::domain_error("line_content: zero polynomial");
    if (!f.ring().is_field()) throw std::invalid_argument("line_content: field ring required");
    const long long p = f.ring().characteristic();

    const Mat2 t = axis_change_for(u);
    const LaurentPoly tf = unimodular_change(f, t);
    uni::UniPoly g;
    for (const auto& [j, row] : detail::collect_x_rows(tf)) {
        g = uni::gcd(g, row.poly, p);
        if (uni::degree(g) == 0) break;
    }
    if (uni::degree(g) <= 0) return LaurentPoly::one(f.ring());
    const LaurentPoly content = unimodular_change(uni::to_laurent_x(g, 0, f.ring()), t.inverse_unimodular());
    return monomial_normal_form(content).proper;
}

/// Exact Laurent quotient f / ell for a line polynomial (or monomial) ell;
/// nullopt when the division is not exact. When a quotient q is returned,
/// q * ell == f holds exactly.
inline std::optional<LaurentPoly> divide_exact_by_line(const LaurentPoly& f, const LaurentPoly& ell) {
    require_same_ring(f.ring(), ell.ring(), "divide_exact_by_line");
    if (ell.is_zero()) throw std::domain_error("divide_exact_by_line: zero divisor");
    if (!f.ring().is_field()) throw std::invalid_argument("divide_exact_by_line: field ring required");
    if (f.is_zero()) return LaurentPoly::zero(f.ring());
    const long long p = f.ring().characteristic();

    if (ell.is_monomial()) {
        const auto& [e, c] = *ell.terms().begin();
        LaurentPoly q = f;
        q.scale(f.ring().inv(c), -e);
        return q;
    }

    const auto dir = line_direction_of(ell);
    if (!dir) throw std::invalid_argument("divide_exact_by_line: divisor is not a line polynomial");
    const Mat2 t = axis_change_for(*dir);
    const LaurentPoly tf = unimodular_change(f, t);
    const LaurentPoly tell = unimodular_change(ell, t);

    // the transformed divisor lives on a single Y-level
    const auto drows = detail::collect_x_rows(tell);
    if (drows.size() != 1) throw std::logic_error("divide_exact_by_line: transform did not flatten divisor");
    const long long j0 = drows.begin()->first;
    const detail::XRow& den = drows.begin()->second;

    LaurentPoly tq(f.ring());
    for (const auto& [j, row] : detail::collect_x_rows(tf)) {
        auto [q, r] = uni::divmod(row.poly, den.poly, p);
        if (!uni::is_zero(r)) return std::nullopt;
        const long long off = row.x_offset - den.x_offset;
        for (std::size_t i = 0; i < q.c.size(); ++i)
            if (q.c[i] != 0) tq.add_term({off + static_cast<long long>(i), j - j0}, q.c[i]);
    }
    return unimodular_change(tq, t.inverse_unimodular());
}

struct LineFactorEntry {
    Direction direction;
    LaurentPoly content;  // line polynomial in that direction, divides f exactly
};

/// Per-direction line polynomial contents of f. Directions are exactly the
/// Newton polygon candidates whose content is a non-monomial.
struct LineFactorProfile {
    std::vector<LineFactorEntry> entries;  // sorted by direction

    bool has_none() const noexcept { return entries.empty(); }
    bool single_direction() const noexcept { return entries.size() == 1; }
    bool multi_direction() const noexcept { return entries.size() >= 2; }
};

inline LineFactorProfile line_factor_profile(const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("line_factor_profile: zero polynomial");
    if (!f.ring().is_field()) throw std::invalid_argument("line_factor_profile: field ring required");
    LineFactorProfile profile;
    for (const Direction& u : candidate_line_directions(f)) {
        LaurentPoly content = line_content(f, u);
        if (content.term_count() < 2) continue;
        const auto cofactor = divide_exact_by_line(f, content);
        if (!cofactor || !(*cofactor * content == f))
            throw std::logic_error("line_factor_profile: content does not divide exactly");
        profile.entries.push_back({u, std::move(content)});
    }
    return profile;
}

enum class NivatKind { NoLineFactors, SingleDirection, MultiDirection };

/// Trichotomy of a defining polynomial by its line polynomial factors,
/// together with a human-readable verdict.
struct NivatClass {
    NivatKind kind;
    std::optional<Direction> direction;    // set for SingleDirection
    std::vector<Direction> directions;     // all directions with content
    std::optional<long long> sublattice;   // support sublattice index, set for MultiDirection
    std::string verdict;
};

inline NivatClass classify_nivat(const LaurentPoly& f) {
    const LineFactorProfile profile = line_factor_profile(f);
    NivatClass out;
    for (const auto& e : profile.entries) out.directions.push_back(e.direction);
    if (profile.has_none()) {
        out.kind = NivatKind::NoLineFactors;
        out.verdict =
            "generalized Nivat property holds: any configuration in this subshift "
            "with a nonzero integer annihilator is two-periodic";
    } else if (profile.single_direction()) {
        out.kind = NivatKind::SingleDirection;
        out.direction = profile.entries.front().direction;
        out.verdict =
            "generalized Nivat property holds: every low-complexity configuration "
            "in this subshift is periodic in direction " +
            to_string(*out.direction);
    } else {
        out.kind = NivatKind::MultiDirection;
        out.sublattice = sublattice_index(f);
        out.verdict =
            "line polynomial factors in multiple directions: the generalized Nivat "
            "property is not decided by this tool (support sublattice index " +
            (out.sublattice ? std::to_string(*out.sublattice) : std::string("infinite")) + ")";
    }
    return out;
}

}  // namespace algsub
