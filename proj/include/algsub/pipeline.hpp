#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "complexity.hpp"
#include "config.hpp"
#include "elimination.hpp"
#include "line_factors.hpp"

namespace algsub {

struct LedrappierMembership {
    bool member;
    LaurentPoly witness;  // beta(Y), zero exactly on members
};

/// Membership of g in the principal ideal generated by 1+X+Y over F_2.
/// Over F_2 that ideal equals (X - (1+Y)), so after monomial normalization
/// the substitution X := 1+Y decides membership; the remainder beta(Y) is
/// returned as witness. A nonzero beta would itself annihilate any
/// configuration annihilated by g and 1+X+Y.
inline LedrappierMembership ledrappier_ideal_membership(const LaurentPoly& g) {
    if (g.is_zero()) throw std::domain_error("ledrappier_ideal_membership: zero polynomial");
    require_same_ring(g.ring(), RingSpec::prime_field(2), "ledrappier_ideal_membership");
    const LaurentPoly proper = monomial_normal_form(g).proper;
    LaurentPoly repl(g.ring());
    repl.add_term({0, 0}, 1);
    repl.add_term({0, 1}, 1);
    LaurentPoly beta = substitute_x(proper, repl);
    return {beta.is_zero(), std::move(beta)};
}

/// Close a width-n seed row into an exact torus of the subshift defined by
/// 1+X+Y over F_2, when the downward evolution returns to the seed. The
/// evolution is row_{j-1}[i] = row_j[i] + row_j[i-1]; closure exists exactly
/// when the seed lies on a cycle of that map.
inline std::optional<ConfigSource> ledrappier_torus_closure(const std::vector<int>& seed) {
    if (seed.empty()) throw std::invalid_argument("ledrappier_torus_closure: empty seed");
    const std::size_t n = seed.size();
    std::vector<int> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = ((seed[i] % 2) + 2) % 2;
    const std::vector<int> start = row;

    std::vector<std::vector<int>> rows{row};
    const std::size_t limit = std::size_t(1) << n;  // state space size
    for (std::size_t step = 1; step <= limit; ++step) {
        std::vector<int> next(n);
        for (std::size_t i = 0; i < n; ++i) next[i] = (row[i] + row[(i + n - 1) % n]) % 2;
        if (next == start) {
            const long long h = static_cast<long long>(step);
            Window grid(RingSpec::prime_field(2), {0, -(h - 1), static_cast<long long>(n), h});
            for (long long j = 0; j < h; ++j)
                for (std::size_t i = 0; i < n; ++i)
                    grid.set(static_cast<long long>(i), -j, rows[static_cast<std::size_t>(j)][i]);
            return ConfigSource::torus(std::move(grid));
        }
        rows.push_back(next);
        row = std::move(next);
    }
    return std::nullopt;
}

enum class PipelineVerdict { TwoPeriodicEvidence, PeriodicInDirection, NonPeriodicEvidence, Inconclusive };

inline const char* to_string(PipelineVerdict v) {
    switch (v) {
        case PipelineVerdict::TwoPeriodicEvidence: return "two-periodic-evidence";
        case PipelineVerdict::PeriodicInDirection: return "periodic-in-direction";
        case PipelineVerdict::NonPeriodicEvidence: return "non-periodic-evidence";
        default: return "inconclusive";
    }
}

struct PipelineStep {
    std::string name;
    std::string detail;
};

struct PipelineReport {
    std::string input_description;
    std::vector<PipelineStep> steps;
    PipelineVerdict verdict = PipelineVerdict::Inconclusive;
    std::optional<Direction> direction;
    std::string verdict_text;

    int exit_code() const {
        switch (verdict) {
            case PipelineVerdict::Inconclusive: return 3;
            case PipelineVerdict::NonPeriodicEvidence: return 4;
            default: return 0;
        }
    }

    std::string render() const {
        std::ostringstream os;
        os << "== configuration periodicity pipeline ==\n" << input_description << "\n";
        for (std::size_t i = 0; i < steps.size(); ++i)
            os << "step " << (i + 1) << " [" << steps[i].name << "] " << steps[i].detail << "\n";
        os << "verdict: " << to_string(verdict);
        if (direction) os << " " << to_string(*direction);
        os << "\n" << verdict_text << "\n";
        return os.str();
    }
};

namespace detail {

inline std::string shape_string(const Shape& s) {
    std::string out = "size " + std::to_string(s.size()) + ", cells";
    for (const auto& c : s.cells()) out += " " + to_string(c);
    return out;
}

inline std::string periods_string(const std::vector<PeriodObservation>& ps, long long bound) {
    if (ps.empty()) return "none within bound " + std::to_string(bound);
    std::string out = std::to_string(ps.size()) + " vectors within bound " + std::to_string(bound) + ":";
    for (std::size_t i = 0; i < ps.size() && i < 8; ++i) out += " " + to_string(ps[i].t);
    if (ps.size() > 8) out += " ...";
    return out;
}

inline bool has_independent_pair(const std::vector<PeriodObservation>& ps) {
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j)
            if (ps[i].t.x * ps[j].t.y - ps[i].t.y * ps[j].t.x != 0) return true;
    return false;
}

}  // namespace detail

/// End-to-end analysis of one configuration against its defining polynomial:
/// complexity count, kernel annihilator over the integers, reduction mod p,
/// line factor profile, elimination, and an observed-period cross-check.
inline PipelineReport nivat_pipeline(const ConfigSource& src, const LaurentPoly& f, const Shape& shape,
                                     const Region& region, long long period_bound = 16) {
    if (!f.ring().is_field()) throw std::invalid_argument("nivat_pipeline: field ring required");
    require_same_ring(f.ring(), src.ring(), "nivat_pipeline");
    const std::uint32_t p = f.ring().characteristic();

    PipelineReport rep;
    rep.input_description = "source: " + src.describe() + "\ndefining polynomial: " + to_string(f) +
                            " over " + f.ring().name() + "\nshape: " + detail::shape_string(shape) +
                            "\nregion: " + to_string(region);

    const AnnihilatorCertificate pre = check_annihilates(f, src, region);
    if (!pre.verified)
        throw std::invalid_argument("nivat_pipeline: defining polynomial does not annihilate the source");
    rep.steps.push_back({"annihilation check",
                         std::string(pre.scope == CertificateScope::ExactTorus ? "exact on torus domain "
                                                                               : "verified on window ") +
                             to_string(pre.region)});

    const ComplexityResult cx = complexity_count(src, shape, region);
    rep.steps.push_back({"pattern complexity",
                         std::to_string(cx.count) + " distinct patterns, |D| = " + std::to_string(cx.shape_size) +
                             (cx.is_low ? " (low complexity" : " (not low complexity") +
                             (cx.exact ? ", exact)" : ", window sample)")});

    const auto gcert = annihilator_from_kernel(src, shape, region, RingSpec::integers());

    const Window win = generate_window(src, region);
    const std::vector<PeriodObservation> periods = detect_periods(win, period_bound);

    const NivatClass cls = classify_nivat(f);
    std::string profile_text;
    {
        const LineFactorProfile profile = line_factor_profile(f);
        if (profile.has_none())
            profile_text = "no line polynomial factors";
        else {
            profile_text = "line polynomial factors:";
            for (const auto& e : profile.entries)
                profile_text += " " + to_string(e.direction) + " content " + to_string(e.content) + ";";
            profile_text.pop_back();
        }
    }

    if (!gcert || !gcert->verified) {
        rep.steps.push_back({"integer annihilator", "none found by the kernel method on this sample"});
        rep.steps.push_back({"line factor profile", profile_text});
        rep.steps.push_back({"observed periods", detail::periods_string(periods, period_bound)});
        rep.verdict = PipelineVerdict::Inconclusive;
        rep.verdict_text =
            "inconclusive: the kernel method produced no integer annihilator on the sampled region, "
            "so the structure route cannot be applied";
        return rep;
    }

    const LaurentPoly& g_z = gcert->poly;
    rep.steps.push_back({"integer annihilator",
                         "g = " + to_string(g_z) +
                             (gcert->scope == CertificateScope::ExactTorus
                                  ? ", exact on torus domain "
                                  : ", verified on window ") +
                             to_string(gcert->region)});

    const LaurentPoly g_p = reduce_mod_p(g_z, p);
    if (g_p.is_zero()) throw std::logic_error("nivat_pipeline: primitive annihilator vanished mod p");
    rep.steps.push_back({"reduction mod " + std::to_string(p), "g = " + to_string(g_p)});
    rep.steps.push_back({"line factor profile", profile_text});

    std::string elim_text;
    if (laurent_coprime(f, g_p)) {
        const CoprimePeriodicityResult cp = coprime_periodicity(f, g_p);
        elim_text = "f and g are coprime; eliminating X: " + to_string(cp.x_eliminated.relation) +
                    ", eliminating Y: " + to_string(cp.y_eliminated.relation) +
                    "; both one-variable combinations annihilate the configuration";
        rep.verdict = PipelineVerdict::TwoPeriodicEvidence;
        rep.verdict_text =
            "two-periodic evidence: coprime annihilator pair yields nonzero one-variable "
            "annihilators in both axes";
    } else if (cls.kind == NivatKind::NoLineFactors) {
        elim_text =
            "f and g share a factor; f has no line polynomial factors, so the existence of a "
            "nonzero integer annihilator already forces two-periodicity";
        rep.verdict = PipelineVerdict::TwoPeriodicEvidence;
        rep.verdict_text =
            "two-periodic evidence: nonzero integer annihilator plus a defining polynomial "
            "without line polynomial factors";
    } else if (cls.kind == NivatKind::SingleDirection) {
        const Direction u = *cls.direction;
        const LaurentPoly common = line_content(g_p, u);
        elim_text = "f and g share a factor; line content of g in direction " + to_string(u) + ": " +
                    to_string(common);
        rep.verdict = PipelineVerdict::PeriodicInDirection;
        rep.direction = u;
        rep.verdict_text = "periodicity evidence in direction " + to_string(u) +
                           ": all line polynomial factors of the defining polynomial lie in this "
                           "direction and a nonzero integer annihilator exists";
    } else {
        elim_text =
            "f and g share a factor and f has line polynomial factors in multiple directions "
            "(support sublattice index " +
            (cls.sublattice ? std::to_string(*cls.sublattice) : std::string("infinite")) +
            "); the structure route does not apply, falling back to observed periods";
        if (detail::has_independent_pair(periods)) {
            rep.verdict = PipelineVerdict::TwoPeriodicEvidence;
            rep.verdict_text = "two-periodic evidence: two independent periods observed on the window";
        } else if (!periods.empty()) {
            rep.verdict = PipelineVerdict::PeriodicInDirection;
            rep.direction = Direction(periods.front().t);
            rep.verdict_text = "periodicity evidence in direction " + to_string(*rep.direction) +
                               ": observed on the window";
        } else {
            rep.verdict = PipelineVerdict::NonPeriodicEvidence;
            rep.verdict_text =
                "non-periodic evidence: no period within the bound on the sampled window; the "
                "defining polynomial has line polynomial factors in multiple directions and its "
                "support spans a proper sublattice, the known escape hatch from "
                "low-complexity-implies-periodicity";
        }
    }
    rep.steps.push_back({"elimination", elim_text});
    rep.steps.push_back({"observed periods", detail::periods_string(periods, period_bound)});
    return rep;
}

/// Built-in worked examples for the CLI pipeline command.
struct WorkedExample {
    std::string name;
    ConfigSource src;
    LaurentPoly f;
    Shape shape;
    Region region;
    long long period_bound;
};

inline WorkedExample worked_example(const std::string& name) {
    const RingSpec f2 = RingSpec::prime_field(2);
    if (name == "fourdot") {
        return {name,
                ConfigSource::fourdot({0, 1, 1, 0}, {0, 0, 1, 0}),
                parse_poly("1 + X + Y + X*Y", f2),
                Shape::block(4, 4),
                Region{-32, -32, 64, 64},
                16};
    }
    if (name == "sublattice") {
        return {name,
                sublattice_counterexample(),
                parse_poly("1 + X^2 + Y^2 + X^2*Y^2", f2),
                Shape::scattered_square(3, 2),
                Region{-64, -64, 128, 128},
                16};
    }
    if (name == "ledrappier-torus") {
        auto torus = ledrappier_torus_closure({1, 1, 0});
        if (!torus) throw std::logic_error("worked_example: expected closure for the width-3 seed");
        return {name, std::move(*torus), parse_poly("1 + X + Y", f2), Shape::block(3, 3),
                Region{0, -2, 3, 3}, 4};
    }
    throw std::invalid_argument("worked_example: unknown example '" + name +
                                "' (expected fourdot, sublattice or ledrappier-torus)");
}

}  // namespace algsub
