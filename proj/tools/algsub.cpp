// Command line front end for the algebraic subshift toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <algsub/complexity.hpp>
#include <algsub/config.hpp>
#include <algsub/elimination.hpp>
#include <algsub/io.hpp>
#include <algsub/line_factors.hpp>
#include <algsub/newton.hpp>
#include <algsub/pipeline.hpp>

using namespace algsub;

namespace {

ExpVec parse_pair(const std::string& s, const char* what) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError(std::string(what) + ": expected <x>,<y>");
    return {std::stoll(s.substr(0, comma)), std::stoll(s.substr(comma + 1))};
}

std::pair<long long, long long> parse_size(const std::string& s) {
    const auto cross = s.find('x');
    if (cross == std::string::npos) throw CLI::ValidationError("size: expected <w>x<h>");
    return {std::stoll(s.substr(0, cross)), std::stoll(s.substr(cross + 1))};
}

Region parse_region(const std::string& s) {
    // <x0>,<y0>,<w>x<h>
    const auto first = s.find(',');
    const auto second = s.find(',', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw CLI::ValidationError("region: expected <x0>,<y0>,<w>x<h>");
    const auto [w, h] = parse_size(s.substr(second + 1));
    return {std::stoll(s.substr(0, first)), std::stoll(s.substr(first + 1, second - first - 1)), w, h};
}

Region region_from(const std::string& origin, const std::string& size) {
    const ExpVec o = parse_pair(origin, "origin");
    const auto [w, h] = parse_size(size);
    return {o.x, o.y, w, h};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write to " + out_path);
    out << text;
}

std::string axis_name(Axis a) { return a == Axis::X ? "X" : "Y"; }

std::string poly_info_report(const LaurentPoly& f) {
    std::ostringstream os;
    os << "polynomial: " << to_string(f) << "\n";
    os << "ring: " << f.ring().name() << "\n";
    os << "terms: " << f.term_count() << "\n";
    const NewtonPolygon np = newton_polygon(f);
    os << "newton polygon vertices:";
    for (const auto& v : np.vertices) os << " " << to_string(v);
    os << "\nnewton polygon edges:";
    if (np.edges.empty()) os << " none";
    for (const auto& e : np.edges)
        os << " " << to_string(e.from) << "->" << to_string(e.to) << " outward "
           << to_string(e.outward_normal) << ";";
    os << "\ncandidate line directions:";
    const auto dirs = candidate_line_directions(f);
    if (dirs.empty()) os << " none";
    for (const auto& d : dirs) os << " " << to_string(d);
    os << "\nsublattice index: ";
    const auto idx = sublattice_index(f);
    os << (idx ? std::to_string(*idx) : std::string("infinite")) << "\n";
    return os.str();
}

std::string classify_report(const LaurentPoly& f, const NivatClass& cls) {
    std::ostringstream os;
    os << "polynomial: " << to_string(f) << "\n";
    os << "ring: " << f.ring().name() << "\n";
    os << "line factor profile:";
    const LineFactorProfile profile = line_factor_profile(f);
    if (profile.has_none()) os << " none";
    for (const auto& e : profile.entries)
        os << " " << to_string(e.direction) << " -> " << to_string(e.content) << ";";
    os << "\nclassification: ";
    switch (cls.kind) {
        case NivatKind::NoLineFactors: os << "no-line-factors"; break;
        case NivatKind::SingleDirection: os << "single-direction " << to_string(*cls.direction); break;
        case NivatKind::MultiDirection:
            os << "multi-direction";
            for (const auto& d : cls.directions) os << " " << to_string(d);
            os << "\nsublattice index: "
               << (cls.sublattice ? std::to_string(*cls.sublattice) : std::string("infinite"));
            break;
    }
    os << "\nverdict: " << cls.verdict << "\n";
    return os.str();
}

std::string certificate_report(const AnnihilatorCertificate& cert, const ConfigSource& src) {
    std::ostringstream os;
    os << "polynomial: " << to_string(cert.poly) << "\n";
    os << "source: " << src.describe() << "\n";
    os << "scope: " << (cert.scope == CertificateScope::ExactTorus ? "exact-torus" : "window") << "\n";
    os << "region: " << to_string(cert.region) << "\n";
    os << "verified: " << (cert.verified ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolchain for two-dimensional algebraic subshifts over prime fields"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::uint32_t mod = 2;
    std::string origin = "0,0";
    std::string size = "16x16";
    std::string out_path;
    std::string source_spec;
    std::string shape_spec;
    std::string region_spec;
    long long bound = 16;

    // ---- poly ------------------------------------------------------------
    auto* poly = app.add_subcommand("poly", "Laurent polynomial analysis");
    poly->require_subcommand(1);

    std::string poly_file, poly_file2, axis_str = "X";

    auto* info = poly->add_subcommand("info", "support geometry report");
    info->add_option("file", poly_file, "polynomial file")->required();
    info->add_option("--mod", mod, "coefficient modulus, 0 = integers");
    info->add_option("--out", out_path, "write the report to a file");
    info->callback([&] {
        emit(poly_info_report(read_poly_file(poly_file, RingSpec::from_modulus(mod))), out_path);
    });

    auto* classify = poly->add_subcommand("classify", "line factor trichotomy");
    classify->add_option("file", poly_file, "polynomial file")->required();
    classify->add_option("--mod", mod, "prime coefficient modulus");
    classify->add_option("--out", out_path, "write the report to a file");
    classify->callback([&] {
        const LaurentPoly f = read_poly_file(poly_file, RingSpec::from_modulus(mod));
        const NivatClass cls = classify_nivat(f);
        emit(classify_report(f, cls), out_path);
        if (cls.kind == NivatKind::MultiDirection) exit_code = 2;
    });

    auto* res = poly->add_subcommand("resultant", "Sylvester resultant");
    res->add_option("f", poly_file, "first polynomial file")->required();
    res->add_option("g", poly_file2, "second polynomial file")->required();
    res->add_option("--axis", axis_str, "eliminated variable (X or Y)");
    res->add_option("--mod", mod, "prime coefficient modulus");
    res->add_option("--out", out_path, "write the report to a file");
    res->callback([&] {
        const RingSpec ring = RingSpec::from_modulus(mod);
        const Axis axis = axis_str == "Y" ? Axis::Y : Axis::X;
        const LaurentPoly r =
            resultant(read_poly_file(poly_file, ring), read_poly_file(poly_file2, ring), axis);
        std::ostringstream os;
        os << "resultant axis " << axis_name(axis) << ": " << to_string(r) << "\n";
        os << "zero: " << (r.is_zero() ? "yes" : "no") << "\n";
        emit(os.str(), out_path);
    });

    auto* bez = poly->add_subcommand("bezout", "cofactors alpha*f + beta*g = r");
    bez->add_option("f", poly_file, "first polynomial file")->required();
    bez->add_option("g", poly_file2, "second polynomial file")->required();
    bez->add_option("--axis", axis_str, "eliminated variable (X or Y)");
    bez->add_option("--mod", mod, "prime coefficient modulus");
    bez->add_option("--out", out_path, "write the report to a file");
    bez->callback([&] {
        const RingSpec ring = RingSpec::from_modulus(mod);
        const Axis axis = axis_str == "Y" ? Axis::Y : Axis::X;
        const EliminationResult r =
            bezout_cofactors(read_poly_file(poly_file, ring), read_poly_file(poly_file2, ring), axis);
        std::ostringstream os;
        os << "alpha: " << to_string(r.alpha) << "\n";
        os << "beta: " << to_string(r.beta) << "\n";
        os << "relation: " << to_string(r.relation) << "\n";
        os << "resultant: " << to_string(r.resultant) << "\n";
        os << "identity alpha*f + beta*g = relation: verified\n";
        emit(os.str(), out_path);
    });

    auto* member = poly->add_subcommand("member-ledrappier", "membership in the ideal (1+X+Y) over F_2");
    member->add_option("file", poly_file, "polynomial file")->required();
    member->add_option("--out", out_path, "write the report to a file");
    member->callback([&] {
        const LedrappierMembership m =
            ledrappier_ideal_membership(read_poly_file(poly_file, RingSpec::prime_field(2)));
        std::ostringstream os;
        os << "member: " << (m.member ? "yes" : "no") << "\n";
        os << "witness beta(Y): " << to_string(m.witness) << "\n";
        emit(os.str(), out_path);
    });

    // ---- config ----------------------------------------------------------
    auto* config = app.add_subcommand("config", "configuration sources and windows");
    config->require_subcommand(1);

    std::string anchor = "0,0";
    std::string part = "sum";

    auto* gen = config->add_subcommand("gen", "materialize a window as a grid");
    gen->add_option("--source", source_spec, "configuration source spec")->required();
    gen->add_option("--mod", mod, "modulus for sources that need one");
    gen->add_option("--origin", origin, "window origin <x>,<y>");
    gen->add_option("--size", size, "window size <w>x<h>");
    gen->add_option("--out", out_path, "write the grid to a file");
    gen->callback([&] {
        const ConfigSource src = parse_source_spec(source_spec, mod);
        emit(write_grid(generate_window(src, region_from(origin, size))), out_path);
    });

    auto* check = config->add_subcommand("check", "verify an annihilator on a source");
    check->add_option("--source", source_spec, "configuration source spec")->required();
    check->add_option("--poly", poly_file, "polynomial file")->required();
    check->add_option("--mod", mod, "modulus for the polynomial and source");
    check->add_option("--origin", origin, "region origin <x>,<y>");
    check->add_option("--size", size, "region size <w>x<h>");
    check->add_option("--out", out_path, "write the report to a file");
    check->callback([&] {
        const ConfigSource src = parse_source_spec(source_spec, mod);
        const LaurentPoly f = read_poly_file(poly_file, src.ring());
        const AnnihilatorCertificate cert = check_annihilates(f, src, region_from(origin, size));
        emit(certificate_report(cert, src), out_path);
        if (!cert.verified) exit_code = 1;
    });

    auto* periods = config->add_subcommand("periods", "window period detection");
    periods->add_option("--source", source_spec, "configuration source spec")->required();
    periods->add_option("--mod", mod, "modulus for sources that need one");
    periods->add_option("--origin", origin, "window origin <x>,<y>");
    periods->add_option("--size", size, "window size <w>x<h>");
    periods->add_option("--bound", bound, "max |t|_inf to test");
    periods->add_option("--out", out_path, "write the report to a file");
    periods->callback([&] {
        const ConfigSource src = parse_source_spec(source_spec, mod);
        const auto obs = detect_periods(generate_window(src, region_from(origin, size)), bound);
        std::ostringstream os;
        for (const auto& o : obs) os << "t=" << to_string(o.t) << " overlap=" << o.overlap_cells << "\n";
        os << "count: " << obs.size() << "\n";
        emit(os.str(), out_path);
    });

    auto* dec = config->add_subcommand("decompose4", "split a 4-dot window as c = h+v (and h+v-2d over Z)");
    dec->add_option("--source", source_spec, "configuration source spec")->required();
    dec->add_option("--mod", mod, "modulus for sources that need one");
    dec->add_option("--origin", origin, "window origin <x>,<y>");
    dec->add_option("--size", size, "window size <w>x<h>");
    dec->add_option("--anchor", anchor, "anchor cell <x>,<y>");
    dec->add_option("--out", out_path, "write the report to a file");
    dec->callback([&] {
        const ConfigSource src = parse_source_spec(source_spec, mod);
        const Window win = generate_window(src, region_from(origin, size));
        const FourDotDecomposition d = fourdot_decompose(win, parse_pair(anchor, "anchor"));
        std::ostringstream os;
        os << "h:\n" << write_grid(d.h) << "v:\n" << write_grid(d.v) << "d:\n" << write_grid(d.d);
        os << "identity c = h+v over F_2: " << (d.mod2_identity ? "holds" : "violated") << "\n";
        os << "identity c = h+v-2d over Z: " << (d.integer_identity ? "holds" : "violated") << "\n";
        emit(os.str(), out_path);
        if (!d.mod2_identity || !d.integer_identity) exit_code = 1;
    });

    auto* counter = config->add_subcommand("counterexample", "the non-periodic low-complexity source");
    counter->add_option("--part", part, "sum, h or v");
    counter->add_option("--origin", origin, "window origin <x>,<y>");
    counter->add_option("--size", size, "window size <w>x<h>");
    counter->add_option("--out", out_path, "write the grid to a file");
    counter->callback([&] {
        SublatticePart sp = SublatticePart::Sum;
        if (part == "h") sp = SublatticePart::Horizontal;
        else if (part == "v") sp = SublatticePart::Vertical;
        else if (part != "sum") throw CLI::ValidationError("part: expected sum, h or v");
        emit(write_grid(generate_window(ConfigSource::sublattice_lines(sp), region_from(origin, size))),
             out_path);
    });

    // ---- complexity --------------------------------------------------------
    auto* cx = app.add_subcommand("complexity", "pattern counting and the kernel annihilator");
    cx->require_subcommand(1);

    std::string kernel_ring = "";

    auto* count = cx->add_subcommand("count", "count distinct shape patterns");
    count->add_option("--source", source_spec, "configuration source spec")->required();
    count->add_option("--mod", mod, "modulus for sources that need one");
    count->add_option("--shape", shape_spec, "shape file or block:WxH / scattered:NxS")->required();
    count->add_option("--region", region_spec, "sample region <x0>,<y0>,<w>x<h>")->required();
    count->add_option("--out", out_path, "write the report to a file");
    count->callback([&] {
        const ConfigSource src = parse_source_spec(source_spec, mod);
        const ComplexityResult r = complexity_count(src, load_shape(shape_spec), parse_region(region_spec));
        std::ostringstream os;
        os << "patterns: " << r.count << "\n|D|: " << r.shape_size << "\n";
        os << "low: " << (r.is_low ? "yes" : "no") << "\n";
        os << "exact: " << (r.exact ? "yes" : "no (window sample)") << "\n";
        emit(os.str(), out_path);
    });

    auto* ann = cx->add_subcommand("annihilator", "kernel-based annihilator search");
    ann->add_option("--source", source_spec, "configuration source spec")->required();
    ann->add_option("--mod", mod, "modulus for sources that need one");
    ann->add_option("--shape", shape_spec, "shape file or block:WxH / scattered:NxS")->required();
    ann->add_option("--region", region_spec, "sample region <x0>,<y0>,<w>x<h>")->required();
    ann->add_option("--ring", kernel_ring, "kernel coefficient ring: a prime, or 0 for the integers "
                                           "(default: the source ring)");
    ann->add_option("--out", out_path, "write the report to a file");
    ann->callback([&] {
        const ConfigSource src = parse_source_spec(source_spec, mod);
        RingSpec ring = src.ring();
        if (!kernel_ring.empty())
            ring = RingSpec::from_modulus(static_cast<std::uint32_t>(std::stoul(kernel_ring)));
        const auto cert =
            annihilator_from_kernel(src, load_shape(shape_spec), parse_region(region_spec), ring);
        std::ostringstream os;
        if (!cert) {
            os << "annihilator: none\n";
            emit(os.str(), out_path);
            exit_code = 1;
            return;
        }
        os << "annihilator: " << to_string(cert->poly) << "\n";
        os << "ring: " << ring.name() << "\n";
        os << "scope: " << (cert->scope == CertificateScope::ExactTorus ? "exact-torus" : "window") << "\n";
        os << "region: " << to_string(cert->region) << "\n";
        os << "verified: " << (cert->verified ? "yes" : "no") << "\n";
        emit(os.str(), out_path);
        if (!cert->verified) exit_code = 1;
    });

    // ---- pipeline ----------------------------------------------------------
    auto* pipe = app.add_subcommand("pipeline", "end-to-end periodicity analysis");
    pipe->require_subcommand(1);

    std::string example;
    std::string pipe_poly;

    auto* run = pipe->add_subcommand("run", "run the analysis pipeline");
    run->add_option("example", example, "built-in example: fourdot, sublattice, ledrappier-torus");
    run->add_option("--source", source_spec, "configuration source spec (custom run)");
    run->add_option("--poly", pipe_poly, "defining polynomial file (custom run)");
    run->add_option("--mod", mod, "modulus for custom runs");
    run->add_option("--shape", shape_spec, "shape file or block:WxH / scattered:NxS (custom run)");
    run->add_option("--region", region_spec, "sample region <x0>,<y0>,<w>x<h> (custom run)");
    run->add_option("--bound", bound, "period detection bound");
    run->add_option("--out", out_path, "write the report to a file");
    run->callback([&] {
        PipelineReport rep;
        if (!example.empty()) {
            const WorkedExample ex = worked_example(example);
            rep = nivat_pipeline(ex.src, ex.f, ex.shape, ex.region, ex.period_bound);
        } else {
            if (source_spec.empty() || pipe_poly.empty() || shape_spec.empty() || region_spec.empty())
                throw CLI::ValidationError(
                    "pipeline run: give an example name or --source/--poly/--shape/--region");
            const ConfigSource src = parse_source_spec(source_spec, mod);
            const LaurentPoly f = read_poly_file(pipe_poly, src.ring());
            rep = nivat_pipeline(src, f, load_shape(shape_spec), parse_region(region_spec), bound);
        }
        emit(rep.render(), out_path);
        exit_code = rep.exit_code();
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
