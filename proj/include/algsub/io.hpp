#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "complexity.hpp"
#include "config.hpp"

namespace algsub {

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

inline std::string strip_comments(const std::string& text) {
    std::string out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        out += line;
        out += ' ';
    }
    return out;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Grid format:
//   %grid mod=<p|0> origin=<x0>,<y0> size=<w>x<h>
// followed by h rows, first line the top row (y = y0+h-1). Cells are bare
// digits for prime fields with p <= 10 and space-separated integers
// otherwise.
// ---------------------------------------------------------------------------

inline std::string write_grid(const Window& win) {
    const Region r = win.region();
    const bool digits = win.ring().is_field() && win.ring().characteristic() <= 10;
    std::ostringstream os;
    os << "%grid mod=" << win.ring().characteristic() << " origin=" << r.x0 << "," << r.y0 << " size="
       << r.w << "x" << r.h << "\n";
    for (long long y = r.y0 + r.h - 1; y >= r.y0; --y) {
        for (long long x = r.x0; x < r.x0 + r.w; ++x) {
            if (digits)
                os << win.at(x, y).convert_to<int>();
            else
                os << (x == r.x0 ? "" : " ") << win.at(x, y);
        }
        os << "\n";
    }
    return os.str();
}

inline Window read_grid(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("grid: missing header");
    std::istringstream hs(header);
    std::string tag, mod_tok, origin_tok, size_tok;
    hs >> tag >> mod_tok >> origin_tok >> size_tok;
    if (tag != "%grid" || mod_tok.rfind("mod=", 0) != 0 || origin_tok.rfind("origin=", 0) != 0 ||
        size_tok.rfind("size=", 0) != 0)
        throw std::runtime_error("grid: malformed header: " + header);

    const std::uint32_t mod = static_cast<std::uint32_t>(std::stoul(mod_tok.substr(4)));
    const std::string origin = origin_tok.substr(7);
    const auto comma = origin.find(',');
    if (comma == std::string::npos) throw std::runtime_error("grid: malformed origin");
    const long long x0 = std::stoll(origin.substr(0, comma));
    const long long y0 = std::stoll(origin.substr(comma + 1));
    const std::string size = size_tok.substr(5);
    const auto cross = size.find('x');
    if (cross == std::string::npos) throw std::runtime_error("grid: malformed size");
    const long long w = std::stoll(size.substr(0, cross));
    const long long h = std::stoll(size.substr(cross + 1));

    const RingSpec ring = RingSpec::from_modulus(mod);
    Window win(ring, {x0, y0, w, h});
    const bool digits = ring.is_field() && ring.characteristic() <= 10;
    for (long long y = y0 + h - 1; y >= y0; --y) {
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("grid: missing row");
        if (digits) {
            const std::string row = detail::trim(line);
            if (static_cast<long long>(row.size()) != w) throw std::runtime_error("grid: bad row width");
            for (long long x = 0; x < w; ++x) {
                const char c = row[static_cast<std::size_t>(x)];
                if (c < '0' || c > '9') throw std::runtime_error("grid: bad digit");
                win.set(x0 + x, y, c - '0');
            }
        } else {
            std::istringstream ls(line);
            for (long long x = 0; x < w; ++x) {
                std::string tok;
                if (!(ls >> tok)) throw std::runtime_error("grid: short row");
                win.set(x0 + x, y, Int(tok));
            }
        }
    }
    return win;
}

inline Window read_grid_string(const std::string& text) {
    std::istringstream in(text);
    return read_grid(in);
}

inline Window read_grid_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open grid file: " + path);
    return read_grid(in);
}

// ---------------------------------------------------------------------------
// Shape format: "%shape" header, then one "i j" pair per line.
// ---------------------------------------------------------------------------

inline std::string write_shape(const Shape& shape) {
    std::ostringstream os;
    os << "%shape\n";
    for (const auto& c : shape.cells()) os << c.x << " " << c.y << "\n";
    return os.str();
}

inline Shape read_shape(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || detail::trim(header) != "%shape")
        throw std::runtime_error("shape: missing %shape header");
    std::vector<ExpVec> cells;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        long long i, j;
        if (!(ls >> i >> j)) throw std::runtime_error("shape: malformed cell line: " + line);
        cells.push_back({i, j});
    }
    return Shape::from_cells(std::move(cells));
}

inline Shape read_shape_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open shape file: " + path);
    return read_shape(in);
}

/// Shape from a file path or an inline spec "block:WxH" / "scattered:NxSTEP".
inline Shape load_shape(const std::string& spec) {
    const auto parse_pair = [&](const std::string& s) {
        const auto cross = s.find('x');
        if (cross == std::string::npos) throw std::runtime_error("shape spec: expected <a>x<b> in " + spec);
        return std::pair<long long, long long>{std::stoll(s.substr(0, cross)), std::stoll(s.substr(cross + 1))};
    };
    if (spec.rfind("block:", 0) == 0) {
        const auto [w, h] = parse_pair(spec.substr(6));
        return Shape::block(w, h);
    }
    if (spec.rfind("scattered:", 0) == 0) {
        const auto [n, step] = parse_pair(spec.substr(10));
        return Shape::scattered_square(n, step);
    }
    return read_shape_file(spec);
}

/// Polynomial from a text file; '#' starts a comment.
inline LaurentPoly read_poly_file(const std::string& path, RingSpec ring) {
    return parse_poly(detail::strip_comments(detail::slurp(path)), ring);
}

// ---------------------------------------------------------------------------
// Source specs:
//   torus:<grid-file>
//   ca:<rule-poly>;seed=<digits>          (ring from the mod argument)
//   fourdot:r=<bits>,s=<bits>
//   sublattice | sublattice:h | sublattice:v
//   zlift(<spec>)
//   sum(<spec>|<spec>)
// ---------------------------------------------------------------------------

inline std::vector<int> parse_word(const std::string& s) {
    std::vector<int> out;
    for (const char c : s) {
        if (c < '0' || c > '9') throw std::runtime_error("source spec: word must be digits: " + s);
        out.push_back(c - '0');
    }
    if (out.empty()) throw std::runtime_error("source spec: empty word");
    return out;
}

inline ConfigSource parse_source_spec(const std::string& raw, std::uint32_t mod) {
    const std::string spec = detail::trim(raw);
    if (spec.rfind("zlift(", 0) == 0 && spec.back() == ')')
        return ConfigSource::zlift(parse_source_spec(spec.substr(6, spec.size() - 7), mod));
    if (spec.rfind("sum(", 0) == 0 && spec.back() == ')') {
        const std::string inner = spec.substr(4, spec.size() - 5);
        int depth = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == '|' && depth == 0)
                return ConfigSource::sum(parse_source_spec(inner.substr(0, i), mod),
                                         parse_source_spec(inner.substr(i + 1), mod));
        }
        throw std::runtime_error("source spec: sum(...) needs a top-level '|'");
    }
    if (spec.rfind("torus:", 0) == 0) return ConfigSource::torus(read_grid_file(spec.substr(6)));
    if (spec.rfind("ca:", 0) == 0) {
        const std::string body = spec.substr(3);
        const auto sep = body.find(";seed=");
        if (sep == std::string::npos) throw std::runtime_error("source spec: ca needs ';seed=<digits>'");
        if (mod == 0) throw std::runtime_error("source spec: ca needs a prime --mod");
        const RingSpec ring = RingSpec::prime_field(mod);
        return ConfigSource::additive_ca(mod, parse_poly(body.substr(0, sep), ring),
                                         parse_word(body.substr(sep + 6)));
    }
    if (spec.rfind("fourdot:", 0) == 0) {
        const std::string body = spec.substr(8);
        if (body.rfind("r=", 0) != 0) throw std::runtime_error("source spec: fourdot needs r=<bits>,s=<bits>");
        const auto sep = body.find(",s=");
        if (sep == std::string::npos) throw std::runtime_error("source spec: fourdot needs ',s=<bits>'");
        return ConfigSource::fourdot(parse_word(body.substr(2, sep - 2)), parse_word(body.substr(sep + 3)));
    }
    if (spec == "sublattice") return ConfigSource::sublattice_lines(SublatticePart::Sum);
    if (spec == "sublattice:h") return ConfigSource::sublattice_lines(SublatticePart::Horizontal);
    if (spec == "sublattice:v") return ConfigSource::sublattice_lines(SublatticePart::Vertical);
    throw std::runtime_error("source spec: unrecognized: " + spec);
}

}  // namespace algsub
