// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status = number of failures.
// An optional argv[1] names the CLI binary, used by the determinism check.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <algsub/complexity.hpp>
#include <algsub/config.hpp>
#include <algsub/elimination.hpp>
#include <algsub/io.hpp>
#include <algsub/line_factors.hpp>
#include <algsub/newton.hpp>
#include <algsub/pipeline.hpp>

#include "oracle_gcd.hpp"
#include "test_support.hpp"

using namespace algsub;
using testsupport::rand_range;
using testsupport::random_poly;
using testsupport::Rng;

namespace {

const RingSpec f2 = RingSpec::prime_field(2);
const RingSpec f3 = RingSpec::prime_field(3);

LaurentPoly fL() { return parse_poly("1 + X + Y", f2); }
LaurentPoly fS() { return parse_poly("1 + X + Y + X*Y", f2); }
LaurentPoly fT() { return parse_poly("1 + X^2 + Y^2 + X^2*Y^2", f2); }

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

std::string g_cli_path;

// 1. Thm-4.2-style counterexample reproduction, all exact.
std::string crit_counterexample() {
    const ConfigSource src = sublattice_counterexample();
    const AnnihilatorCertificate cert = check_annihilates(fT(), src, {-64, -64, 128, 128});
    require(cert.verified, "f_T must annihilate the counterexample on the 128x128 window");

    const ComplexityResult cx = complexity_count(src, Shape::scattered_square(3, 2), {-32, -32, 64, 64});
    require(cx.count == 7, "expected exactly 7 patterns, got " + std::to_string(cx.count));
    require(cx.shape_size == 9, "expected |D| = 9");
    require(cx.is_low, "7 <= 9 must register as low complexity");

    const Window win = generate_window(src, {-64, -64, 128, 128});
    require(detect_periods(win, 32).empty(), "the counterexample must show no period up to bound 32");

    const Window hwin =
        generate_window(ConfigSource::sublattice_lines(SublatticePart::Horizontal), {-64, -64, 128, 128});
    const Window vwin =
        generate_window(ConfigSource::sublattice_lines(SublatticePart::Vertical), {-64, -64, 128, 128});
    const auto contains = [](const std::vector<PeriodObservation>& ps, ExpVec t) {
        for (const auto& o : ps)
            if (o.t == t) return true;
        return false;
    };
    require(contains(detect_periods(hwin, 32), {2, 0}), "h-part must be (2,0)-periodic");
    require(contains(detect_periods(vwin, 32), {0, 2}), "v-part must be (0,2)-periodic");
    return "annihilation, complexity 7/9, no periods, part periods (2,0)/(0,2)";
}

// 2. 4-dot decomposition identities on 100 seeded random sources.
std::string crit_fourdot_decomposition() {
    Rng rng(20240402);
    const LaurentPoly one_plus_x = parse_poly("1 + X", f2);
    const LaurentPoly one_plus_y = parse_poly("1 + Y", f2);
    for (int i = 0; i < 100; ++i) {
        std::vector<int> r, s;
        for (int k = static_cast<int>(rand_range(rng, 1, 8)); k-- > 0;)
            r.push_back(static_cast<int>(rand_range(rng, 0, 1)));
        for (int k = static_cast<int>(rand_range(rng, 1, 8)); k-- > 0;)
            s.push_back(static_cast<int>(rand_range(rng, 0, 1)));
        const Window win = generate_window(ConfigSource::fourdot(r, s), {-32, -32, 64, 64});
        const FourDotDecomposition d = fourdot_decompose(win);
        require(d.mod2_identity, "c = h+v over F_2 failed at case " + std::to_string(i));
        require(d.integer_identity, "c = h+v-2d over Z failed at case " + std::to_string(i));
        require(apply_poly(one_plus_x, d.h).all_zero(), "(1+X)h = 0 failed at case " + std::to_string(i));
        require(apply_poly(one_plus_y, d.v).all_zero(), "(1+Y)v = 0 failed at case " + std::to_string(i));
    }
    return "100/100 sources decompose with both identities and part periodicities";
}

// 3. Line factor analysis of f_L, f_S, f_T.
std::string crit_line_factor_analysis() {
    const NewtonPolygon np = newton_polygon(fL());
    require(np.vertices == std::vector<ExpVec>{{0, 0}, {1, 0}, {0, 1}}, "f_L hull vertices");
    require(candidate_line_directions(fL()).empty(), "f_L must have no candidate directions");
    require(classify_nivat(fL()).kind == NivatKind::NoLineFactors, "f_L must classify NoLineFactors");

    const LineFactorProfile ps = line_factor_profile(fS());
    require(ps.entries.size() == 2, "f_S must have two line factor directions");
    require(ps.entries[0].direction == Direction(0, 1) && ps.entries[0].content == parse_poly("1+Y", f2),
            "f_S content in (0,1) must be 1+Y");
    require(ps.entries[1].direction == Direction(1, 0) && ps.entries[1].content == parse_poly("1+X", f2),
            "f_S content in (1,0) must be 1+X");

    const LineFactorProfile pt = line_factor_profile(fT());
    require(pt.entries.size() == 2, "f_T must have two line factor directions");
    require(pt.entries[0].direction == Direction(0, 1) && pt.entries[0].content == parse_poly("1+Y^2", f2),
            "f_T content in (0,1) must be 1+Y^2");
    require(pt.entries[1].direction == Direction(1, 0) && pt.entries[1].content == parse_poly("1+X^2", f2),
            "f_T content in (1,0) must be 1+X^2");
    require(sublattice_index(fT()) == 4, "f_T sublattice index must be 4");
    require(sublattice_index(fS()) == 1, "f_S sublattice index must be 1");
    return "hulls, candidate directions, contents and sublattice indices all exact";
}

// 4. Resultant properties against the independent euclid oracle, 200 pairs.
std::string crit_resultants() {
    Rng rng(714);
    int checked = 0, coprime = 0, with_common = 0;
    for (int i = 0; i < 200; ++i) {
        const RingSpec ring = i < 100 ? f2 : f3;
        LaurentPoly f = random_poly(rng, ring, 0, 4, 6);
        LaurentPoly g = random_poly(rng, ring, 0, 4, 6);
        if (i % 5 == 0) g = f * random_poly(rng, ring, 0, 2, 3);  // exercise the zero branch

        const bool oracle_x = oracle::common_x_factor(f, g);
        require(resultant(f, g, Axis::X).is_zero() == oracle_x,
                "Res_X zero/nonzero disagrees with the euclid oracle at pair " + std::to_string(i));
        const LaurentPoly ft = unimodular_change(f, Mat2{0, 1, 1, 0});
        const LaurentPoly gt = unimodular_change(g, Mat2{0, 1, 1, 0});
        const bool oracle_y = oracle::common_x_factor(ft, gt);
        require(resultant(f, g, Axis::Y).is_zero() == oracle_y,
                "Res_Y zero/nonzero disagrees with the euclid oracle at pair " + std::to_string(i));
        ++checked;

        if (oracle_x || oracle_y) {
            ++with_common;
            continue;  // not a coprime pair
        }
        ++coprime;
        for (const Axis axis : {Axis::X, Axis::Y}) {
            const EliminationResult r = bezout_cofactors(f, g, axis);
            require((r.alpha * f + r.beta * g - r.relation).is_zero(),
                    "bezout identity failed at pair " + std::to_string(i));
            require(!r.relation.is_zero(), "bezout relation must be nonzero");
            require(axis == Axis::X ? r.relation.is_univariate_y() : r.relation.is_univariate_x(),
                    "bezout relation must be univariate");
        }
    }
    require(checked == 200, "expected 200 pairs");
    require(coprime >= 50 && with_common >= 20, "sample must exercise both branches");
    return "200/200 oracle agreements; " + std::to_string(coprime) + " coprime pairs with exact identities";
}

// 5. Ledrappier ideal membership, 100 seeded cases.
std::string crit_ledrappier_membership() {
    Rng rng(5150);
    for (int i = 0; i < 100; ++i) {
        const LaurentPoly g = random_poly(rng, f2, -3, 3, 6);
        require(ledrappier_ideal_membership(g * fL()).member,
                "multiple of f_L must be a member at case " + std::to_string(i));
        require(!ledrappier_ideal_membership(g * fL() + LaurentPoly::one(f2)).member,
                "multiple of f_L plus one must not be a member at case " + std::to_string(i));
    }
    return "100/100 membership and non-membership decisions";
}

// 6. Constructive low-complexity-to-annihilator path on random tori.
std::string crit_kernel_annihilators() {
    Rng rng(160206);
    int qualifying = 0;
    for (int i = 0; i < 50; ++i) {
        const RingSpec ring = i % 2 ? f2 : f3;
        const long long w = rand_range(rng, 1, 8);
        const long long h = rand_range(rng, 1, 8);
        Window grid(ring, {0, 0, w, h});
        for (long long y = 0; y < h; ++y)
            for (long long x = 0; x < w; ++x)
                grid.set(x, y, rand_range(rng, 0, ring.characteristic() - 1));
        const ConfigSource torus = ConfigSource::torus(std::move(grid));
        const Region dom = *torus.torus_domain();
        const Shape d = Shape::block(4, 4);
        const ComplexityResult cx = complexity_count(torus, d, dom);
        if (cx.count > 16) continue;
        ++qualifying;
        const auto cert = annihilator_from_kernel(torus, d, dom, ring);
        require(cert.has_value(), "kernel must find an annihilator at case " + std::to_string(i));
        require(cert->verified && cert->scope == CertificateScope::ExactTorus,
                "certificate must re-verify exactly on the torus at case " + std::to_string(i));
        const auto zcert = annihilator_from_kernel(torus, d, dom, RingSpec::integers());
        require(zcert.has_value() && zcert->verified,
                "integer kernel must also produce a verified certificate at case " + std::to_string(i));
    }
    require(qualifying >= 10, "sample must contain enough qualifying cases");
    return std::to_string(qualifying) + "/" + std::to_string(qualifying) + " qualifying cases verified";
}

// 7. Generalized-Nivat spot check on all exactly closed Ledrappier tori of
//    seed width <= 8: low complexity for the 3x3 block implies an observed
//    period. Oracle: exhaustive enumeration.
std::string crit_ledrappier_spot_check() {
    int closed = 0, low = 0;
    for (int n = 1; n <= 8; ++n) {
        for (int bits = 0; bits < (1 << n); ++bits) {
            std::vector<int> seed(n);
            for (int k = 0; k < n; ++k) seed[k] = (bits >> k) & 1;
            const auto torus = ledrappier_torus_closure(seed);
            if (!torus) continue;
            ++closed;
            const Region dom = *torus->torus_domain();
            const ComplexityResult cx = complexity_count(*torus, Shape::block(3, 3), dom);
            require(cx.exact, "torus complexity must be exact");
            if (cx.count > 9) continue;
            ++low;
            // two fundamental domains in each direction so that wraparound
            // periods are observable inside the window
            const Region doubled{dom.x0, dom.y0 - dom.h, 2 * dom.w, 2 * dom.h};
            const Window win = generate_window(*torus, doubled);
            const long long bound = std::max(dom.w, dom.h);
            require(!detect_periods(win, bound).empty(),
                    "low complexity Ledrappier torus must be periodic (seed width " + std::to_string(n) + ")");
        }
    }
    require(closed >= 20, "expected a healthy number of closed tori, got " + std::to_string(closed));
    require(low >= 10, "expected enough low-complexity cases, got " + std::to_string(low));
    return std::to_string(closed) + " closed tori, " + std::to_string(low) +
           " low-complexity cases, all periodic";
}

// 8. Additive-CA invariant: Y - g(X) annihilates the space-time diagram and
//    multi-term rules classify as NoLineFactors.
std::string crit_additive_ca() {
    Rng rng(88981);
    for (int i = 0; i < 20; ++i) {
        const std::uint32_t p = i % 2 ? 2 : 3;
        const RingSpec ring = RingSpec::prime_field(p);
        const int terms = static_cast<int>(rand_range(rng, 1, 3));
        LaurentPoly rule(ring);
        std::vector<long long> exps;
        while (static_cast<int>(exps.size()) < terms) {
            const long long e = rand_range(rng, -2, 2);
            if (std::find(exps.begin(), exps.end(), e) == exps.end()) exps.push_back(e);
        }
        for (const long long e : exps) rule.add_term({e, 0}, rand_range(rng, 1, p - 1));
        std::vector<int> seed;
        for (int k = static_cast<int>(rand_range(rng, 1, 6)); k-- > 0;)
            seed.push_back(static_cast<int>(rand_range(rng, 0, p - 1)));
        const ConfigSource ca = ConfigSource::additive_ca(p, rule, seed);

        LaurentPoly annihilator(ring);  // Y - g(X)
        annihilator.add_term({0, 1}, 1);
        annihilator -= rule;
        const auto cert = check_annihilates(annihilator, ca, {-10, -12, 20, 13});
        require(cert.verified, "Y - g(X) must annihilate the CA window at case " + std::to_string(i));
        if (rule.term_count() >= 2)
            require(classify_nivat(annihilator).kind == NivatKind::NoLineFactors,
                    "multi-term rule must classify NoLineFactors at case " + std::to_string(i));
    }
    return "20/20 rules: window annihilation exact; multi-term rules have no line factors";
}

// 9. Byte-identical pipeline reports across two consecutive runs.
std::string crit_pipeline_determinism() {
    const char* names[] = {"fourdot", "sublattice", "ledrappier-torus"};
    const int expected_exit[] = {0, 4, 0};
    for (int k = 0; k < 3; ++k) {
        const WorkedExample ex = worked_example(names[k]);
        const std::string a = nivat_pipeline(ex.src, ex.f, ex.shape, ex.region, ex.period_bound).render();
        const std::string b = nivat_pipeline(ex.src, ex.f, ex.shape, ex.region, ex.period_bound).render();
        require(!a.empty() && a == b, std::string("in-process report must be identical for ") + names[k]);
    }
    if (g_cli_path.empty()) return "in-process reports byte-identical (no CLI path given)";

    const auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    for (int k = 0; k < 3; ++k) {
        const std::string out1 = std::string("acceptance_pipeline_") + names[k] + "_1.txt";
        const std::string out2 = std::string("acceptance_pipeline_") + names[k] + "_2.txt";
        for (const std::string& out : {out1, out2}) {
            const std::string cmd =
                "'" + g_cli_path + "' pipeline run " + names[k] + " --out '" + out + "'";
            const int rc = std::system(cmd.c_str());
            require(WIFEXITED(rc) && WEXITSTATUS(rc) == expected_exit[k],
                    std::string("unexpected exit code from the CLI for ") + names[k]);
        }
        const std::string a = slurp(out1), b = slurp(out2);
        require(!a.empty() && a == b, std::string("CLI reports must be byte-identical for ") + names[k]);
        std::remove(out1.c_str());
        std::remove(out2.c_str());
    }
    return "three worked examples byte-identical across two CLI runs, exit codes 0/4/0";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) g_cli_path = argv[1];
    struct Criterion {
        const char* name;
        std::function<std::string()> run;
    };
    const std::vector<Criterion> criteria = {
        {"counterexample reproduction", crit_counterexample},
        {"4-dot decomposition", crit_fourdot_decomposition},
        {"line-factor analysis", crit_line_factor_analysis},
        {"resultant properties", crit_resultants},
        {"ledrappier ideal membership", crit_ledrappier_membership},
        {"low-complexity kernel annihilators", crit_kernel_annihilators},
        {"ledrappier generalized-nivat spot check", crit_ledrappier_spot_check},
        {"additive-CA invariant", crit_additive_ca},
        {"pipeline determinism", crit_pipeline_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            const std::string detail = criteria[i].run();
            std::printf("PASS %zu %s: %s\n", i + 1, criteria[i].name, detail.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("FAIL %zu %s: %s\n", i + 1, criteria[i].name, e.what());
        }
        std::fflush(stdout);
    }
    return failures;
}
