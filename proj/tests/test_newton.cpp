#include <catch2/catch_amalgamated.hpp>

#include <algsub/line_factors.hpp>
#include <algsub/newton.hpp>

#include "test_support.hpp"

using namespace algsub;
using testsupport::random_line_poly;
using testsupport::random_poly;
using testsupport::Rng;

namespace {
const RingSpec f2 = RingSpec::prime_field(2);
const RingSpec f3 = RingSpec::prime_field(3);

LaurentPoly fL() { return parse_poly("1 + X + Y", f2); }
LaurentPoly fS() { return parse_poly("1 + X + Y + X*Y", f2); }
LaurentPoly fT() { return parse_poly("1 + X^2 + Y^2 + X^2*Y^2", f2); }
}  // namespace

TEST_CASE("direction canonicalization") {
    CHECK(Direction(-2, 2) == Direction(1, -1));
    CHECK(Direction(0, -3) == Direction(0, 1));
    CHECK(Direction(4, 6) == Direction(2, 3));
    CHECK(Direction(-5, 0) == Direction(1, 0));
    CHECK_THROWS_AS(Direction(0, 0), std::invalid_argument);
}

TEST_CASE("axis change sends the direction to (1,0)") {
    const Direction dirs[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 3}, {3, -2}, {1, -7}};
    for (const Direction& u : dirs) {
        const Mat2 m = axis_change_for(u);
        CHECK(m.det() == 1);
        CHECK(m.apply(u.vec()) == ExpVec{1, 0});
    }
}

TEST_CASE("triangle hull of the three-dot polynomial") {
    const NewtonPolygon np = newton_polygon(fL());
    CHECK(np.vertices == std::vector<ExpVec>{{0, 0}, {1, 0}, {0, 1}});
    REQUIRE(np.edges.size() == 3);
    CHECK(np.edges[0].outward_normal == ExpVec{0, -1});
    CHECK(np.edges[1].outward_normal == ExpVec{1, 1});
    CHECK(np.edges[2].outward_normal == ExpVec{-1, 0});
    CHECK(candidate_line_directions(fL()).empty());
}

TEST_CASE("square hulls") {
    const NewtonPolygon np = newton_polygon(fS());
    CHECK(np.vertices == std::vector<ExpVec>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto dirs = candidate_line_directions(fS());
    CHECK(dirs == std::set<Direction>{Direction(1, 0), Direction(0, 1)});
    CHECK(candidate_line_directions(fT()) == std::set<Direction>{Direction(1, 0), Direction(0, 1)});
}

TEST_CASE("degenerate hulls") {
    const NewtonPolygon point = newton_polygon(parse_poly("X^2*Y", f2));
    CHECK(point.is_point());
    CHECK(point.vertices == std::vector<ExpVec>{{2, 1}});
    CHECK(point.edges.empty());
    CHECK(candidate_line_directions(parse_poly("X^2*Y", f2)).empty());

    const NewtonPolygon seg = newton_polygon(parse_poly("1 + X^3", f2));
    CHECK(seg.is_segment());
    CHECK(seg.vertices == std::vector<ExpVec>{{0, 0}, {3, 0}});
    REQUIRE(seg.edges.size() == 2);
    CHECK(seg.edges[0].outward_normal == -seg.edges[1].outward_normal);
    CHECK(candidate_line_directions(parse_poly("1 + X^3", f2)) == std::set<Direction>{Direction(1, 0)});

    CHECK_THROWS_AS(newton_polygon(LaurentPoly::zero(f2)), std::domain_error);
}

TEST_CASE("hull contains the support") {
    Rng rng(2024);
    for (int i = 0; i < 50; ++i) {
        const LaurentPoly f = random_poly(rng, f3, -5, 5, 8);
        const NewtonPolygon np = newton_polygon(f);
        const auto support = f.support();
        for (const auto& v : np.vertices)
            CHECK(std::find(support.begin(), support.end(), v) != support.end());
        for (const auto& e : np.edges)
            for (const auto& p : support) {
                const ExpVec d = p - e.from;
                CHECK(d.x * e.outward_normal.x + d.y * e.outward_normal.y <= 0);
            }
    }
}

TEST_CASE("line factors force parallel outer edges") {
    // multiplying by a line polynomial in direction u leaves an outer-edge
    // pair perpendicular to u, so u must appear among the candidates
    Rng rng(77);
    const Direction dirs[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}};
    for (int i = 0; i < 60; ++i) {
        const RingSpec ring = i % 2 ? f2 : f3;
        const Direction u = dirs[i % 5];
        const LaurentPoly g = random_line_poly(rng, ring, u, 3);
        const LaurentPoly f = random_poly(rng, ring, -3, 3, 5);
        const auto cands = candidate_line_directions(f * g);
        CHECK(cands.count(u) == 1);
    }
}

TEST_CASE("sublattice index") {
    CHECK(sublattice_index(fS()) == 1);
    CHECK(sublattice_index(fT()) == 4);
    CHECK_FALSE(sublattice_index(parse_poly("X^2*Y", f2)).has_value());
    CHECK_FALSE(sublattice_index(parse_poly("1 + X^2", f2)).has_value());
    CHECK(sublattice_index(parse_poly("1 + X^2 + Y^4", f2)) == 8);

    Rng rng(11);
    const Mat2 mats[] = {{1, 0, -1, 1}, {0, 1, -1, 0}, {2, 1, 1, 1}};
    for (int i = 0; i < 40; ++i) {
        const LaurentPoly f = random_poly(rng, f3, -4, 4, 6);
        const auto idx = sublattice_index(f);
        CHECK(sublattice_index(monomial_normal_form(f).proper) == idx);
        CHECK(sublattice_index(unimodular_change(f, mats[i % 3])) == idx);
    }
}
