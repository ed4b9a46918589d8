#pragma once

#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "laurent.hpp"

namespace algsub {

/// Primitive direction vector of Z^2 with canonical sign: gcd(|a|,|b|) = 1
/// and a > 0, or a = 0 and b > 0.
class Direction {
  public:
    Direction(long long a, long long b) {
        if (a == 0 && b == 0) throw std::invalid_argument("Direction: zero vector");
        const long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
        a /= g;
        b /= g;
        if (a < 0 || (a == 0 && b < 0)) {
            a = -a;
            b = -b;
        }
        a_ = a;
        b_ = b;
    }

    explicit Direction(const ExpVec& v) : Direction(v.x, v.y) {}

    long long a() const noexcept { return a_; }
    long long b() const noexcept { return b_; }
    ExpVec vec() const noexcept { return {a_, b_}; }

    friend auto operator<=>(const Direction&, const Direction&) = default;

  private:
    long long a_, b_;
};

inline std::string to_string(const Direction& d) {
    return "(" + std::to_string(d.a()) + "," + std::to_string(d.b()) + ")";
}

/// Unimodular matrix sending the primitive direction u to (1,0).
inline Mat2 axis_change_for(const Direction& u) {
    // extended gcd: s*a + t*b = 1
    long long a = u.a(), b = u.b();
    long long r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    // r0 = gcd = ±1 since u is primitive; fold the sign into the row
    const Mat2 m{s0 * r0, t0 * r0, -b, a};
    return m;
}

struct HullEdge {
    ExpVec from;
    ExpVec to;
    ExpVec outward_normal;  // primitive, true outward sign
};

/// Convex hull of a polynomial support. Vertices are the extreme points in
/// counter-clockwise order starting at the lexicographically smallest; a
/// single point has no edges; a segment reports one geometric edge with both
/// opposite normals.
struct NewtonPolygon {
    std::vector<ExpVec> vertices;
    std::vector<HullEdge> edges;

    bool is_point() const noexcept { return vertices.size() == 1; }
    bool is_segment() const noexcept { return vertices.size() == 2; }
};

namespace detail {

inline long long cross(const ExpVec& o, const ExpVec& a, const ExpVec& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline ExpVec primitive(ExpVec v) {
    const long long g = std::gcd(v.x < 0 ? -v.x : v.x, v.y < 0 ? -v.y : v.y);
    return {v.x / g, v.y / g};
}

}  // namespace detail

inline NewtonPolygon newton_polygon(const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("newton_polygon: zero polynomial");
    const std::vector<ExpVec> pts = f.support();  // sorted lexicographically, unique
    NewtonPolygon np;

    if (pts.size() == 1) {
        np.vertices = pts;
        return np;
    }

    // monotone chain; strict turns only, so collinear interior points drop
    // out. With this cross convention the result is already counter-clockwise
    // and starts at the lexicographically smallest point.
    std::vector<ExpVec> hull;
    hull.reserve(2 * pts.size());
    for (const auto& p : pts) {
        while (hull.size() >= 2 && detail::cross(hull[hull.size() - 2], hull.back(), p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    const std::size_t lower = hull.size() + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
        while (hull.size() >= lower && detail::cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
            hull.pop_back();
        hull.push_back(*it);
    }
    hull.pop_back();  // last point equals the first

    if (hull.size() == 2) {  // collinear support: one geometric edge, both normals
        np.vertices = hull;
        const ExpVec d = detail::primitive(hull[1] - hull[0]);
        const ExpVec n{d.y, -d.x};
        np.edges.push_back({hull[0], hull[1], n});
        np.edges.push_back({hull[1], hull[0], -n});
        return np;
    }

    std::rotate(hull.begin(), std::min_element(hull.begin(), hull.end()), hull.end());
    np.vertices = hull;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const ExpVec a = hull[i];
        const ExpVec b = hull[(i + 1) % hull.size()];
        const ExpVec d = detail::primitive(b - a);
        np.edges.push_back({a, b, {d.y, -d.x}});
    }
    return np;
}

/// Directions u for which f can possibly have a line polynomial factor in
/// direction u: the hull needs two parallel outer edges perpendicular to a
/// common normal. A segment support is its own sole candidate; a monomial
/// has none.
inline std::set<Direction> candidate_line_directions(const LaurentPoly& f) {
    const NewtonPolygon np = newton_polygon(f);
    std::set<Direction> out;
    if (np.is_point()) return out;
    if (np.is_segment()) {
        out.insert(Direction(np.vertices[1] - np.vertices[0]));
        return out;
    }
    std::map<Direction, int> edge_count;
    for (const auto& e : np.edges) ++edge_count[Direction(e.to - e.from)];
    for (const auto& [dir, n] : edge_count)
        if (n >= 2) out.insert(dir);
    return out;
}

/// Index in Z^2 of the lattice generated by all differences of support
/// points; nullopt when the differences span rank < 2 ("infinite").
/// Computed as the gcd of the 2x2 minors of the difference vectors.
inline std::optional<long long> sublattice_index(const LaurentPoly& f) {
    if (f.is_zero()) throw std::domain_error("sublattice_index: zero polynomial");
    const std::vector<ExpVec> pts = f.support();
    if (pts.size() < 2) return std::nullopt;
    std::vector<ExpVec> diffs;
    diffs.reserve(pts.size() - 1);
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(pts[i] - pts[0]);
    long long g = 0;
    for (std::size_t i = 0; i < diffs.size(); ++i)
        for (std::size_t j = i + 1; j < diffs.size(); ++j) {
            const long long det = diffs[i].x * diffs[j].y - diffs[i].y * diffs[j].x;
            g = std::gcd(g, det < 0 ? -det : det);
        }
    if (g == 0) return std::nullopt;
    return g;
}

}  // namespace algsub
