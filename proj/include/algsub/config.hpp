#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "laurent.hpp"

namespace algsub {

/// Rectangle of Z^2: cells (x,y) with x0 <= x < x0+w, y0 <= y < y0+h.
struct Region {
    long long x0 = 0;
    long long y0 = 0;
    long long w = 1;
    long long h = 1;

    friend bool operator==(const Region&, const Region&) = default;
};

inline std::string to_string(const Region& r) {
    return std::to_string(r.w) + "x" + std::to_string(r.h) + " at (" + std::to_string(r.x0) + "," +
           std::to_string(r.y0) + ")";
}

/// Finite rectangular excerpt of a configuration, cell (x,y) holding the
/// color c_{x,y} in canonical ring form.
class Window {
  public:
    Window(RingSpec ring, Region box) : ring_(ring), box_(box) {
        if (box.w < 1 || box.h < 1) throw std::invalid_argument("Window: size must be at least 1x1");
        cells_.assign(static_cast<std::size_t>(box.w * box.h), Int(0));
    }

    const RingSpec& ring() const noexcept { return ring_; }
    const Region& region() const noexcept { return box_; }

    bool contains(long long x, long long y) const noexcept {
        return x >= box_.x0 && x < box_.x0 + box_.w && y >= box_.y0 && y < box_.y0 + box_.h;
    }

    const Int& at(long long x, long long y) const {
        if (!contains(x, y)) throw std::out_of_range("Window::at: cell outside window");
        return cells_[index(x, y)];
    }

    void set(long long x, long long y, Int v) {
        if (!contains(x, y)) throw std::out_of_range("Window::set: cell outside window");
        cells_[index(x, y)] = ring_.canonical(std::move(v));
    }

    bool all_zero() const {
        return std::all_of(cells_.begin(), cells_.end(), [](const Int& v) { return v == 0; });
    }

    friend bool operator==(const Window& a, const Window& b) {
        return a.ring_ == b.ring_ && a.box_ == b.box_ && a.cells_ == b.cells_;
    }

  private:
    std::size_t index(long long x, long long y) const noexcept {
        return static_cast<std::size_t>((y - box_.y0) * box_.w + (x - box_.x0));
    }

    RingSpec ring_;
    Region box_;
    std::vector<Int> cells_;
};

/// Rename the elements of a prime-field window as the integers 0..p-1.
inline Window zlift(const Window& win) {
    if (!win.ring().is_field()) throw std::invalid_argument("zlift: field window required");
    Window out(RingSpec::integers(), win.region());
    const Region r = win.region();
    for (long long y = r.y0; y < r.y0 + r.h; ++y)
        for (long long x = r.x0; x < r.x0 + r.w; ++x) out.set(x, y, win.at(x, y));
    return out;
}

enum class SublatticePart { Sum, Horizontal, Vertical };

/// Finite description of an infinite configuration. Immutable; composite
/// sources share their children.
class ConfigSource {
  public:
    struct Torus {
        Window grid;  // fundamental domain, repeated with wraparound
    };
    struct AdditiveCA {
        std::uint32_t p;
        LaurentPoly rule;       // univariate in X over F_p, at least one term
        std::vector<int> seed;  // row j = 0, repeated periodically in i
    };
    struct FourDot {
        std::vector<int> r, s;  // c_{i,j} = r_i + s_j over F_2
    };
    struct SublatticeLines {
        SublatticePart part;
    };
    struct Sum {
        std::shared_ptr<const ConfigSource> left, right;
    };
    struct ZLift {
        std::shared_ptr<const ConfigSource> base;
    };
    using Node = std::variant<Torus, AdditiveCA, FourDot, SublatticeLines, Sum, ZLift>;

    static ConfigSource torus(Window grid) { return ConfigSource(Torus{std::move(grid)}); }

    static ConfigSource additive_ca(std::uint32_t p, LaurentPoly rule, std::vector<int> seed) {
        const RingSpec ring = RingSpec::prime_field(p);
        require_same_ring(rule.ring(), ring, "additive_ca");
        if (rule.is_zero()) throw std::invalid_argument("additive_ca: rule needs at least one term");
        if (!rule.is_univariate_x()) throw std::invalid_argument("additive_ca: rule must be univariate in X");
        if (seed.empty()) throw std::invalid_argument("additive_ca: empty seed row");
        for (int& v : seed) v = static_cast<int>(((v % static_cast<int>(p)) + p) % p);
        return ConfigSource(AdditiveCA{p, std::move(rule), std::move(seed)});
    }

    static ConfigSource fourdot(std::vector<int> r, std::vector<int> s) {
        if (r.empty() || s.empty()) throw std::invalid_argument("fourdot: empty word");
        for (int& v : r) v = ((v % 2) + 2) % 2;
        for (int& v : s) v = ((v % 2) + 2) % 2;
        return ConfigSource(FourDot{std::move(r), std::move(s)});
    }

    static ConfigSource sublattice_lines(SublatticePart part = SublatticePart::Sum) {
        return ConfigSource(SublatticeLines{part});
    }

    static ConfigSource sum(ConfigSource left, ConfigSource right) {
        require_same_ring(left.ring(), right.ring(), "ConfigSource::sum");
        return ConfigSource(Sum{std::make_shared<const ConfigSource>(std::move(left)),
                                std::make_shared<const ConfigSource>(std::move(right))});
    }

    static ConfigSource zlift(ConfigSource base) {
        if (!base.ring().is_field()) throw std::invalid_argument("zlift: field source required");
        return ConfigSource(ZLift{std::make_shared<const ConfigSource>(std::move(base))});
    }

    const Node& node() const noexcept { return node_; }

    RingSpec ring() const {
        if (const auto* t = std::get_if<Torus>(&node_)) return t->grid.ring();
        if (const auto* ca = std::get_if<AdditiveCA>(&node_)) return RingSpec::prime_field(ca->p);
        if (std::get_if<FourDot>(&node_) || std::get_if<SublatticeLines>(&node_))
            return RingSpec::prime_field(2);
        if (const auto* s = std::get_if<Sum>(&node_)) return s->left->ring();
        return RingSpec::integers();  // ZLift
    }

    /// Fundamental domain when the source is a torus (possibly z-lifted), the
    /// only case where annihilation checks can be made exact and global.
    std::optional<Region> torus_domain() const {
        if (const auto* t = std::get_if<Torus>(&node_)) return t->grid.region();
        if (const auto* z = std::get_if<ZLift>(&node_)) return z->base->torus_domain();
        return std::nullopt;
    }

    std::string describe() const {
        if (const auto* t = std::get_if<Torus>(&node_))
            return "torus " + to_string(t->grid.region()) + " over " + t->grid.ring().name();
        if (const auto* ca = std::get_if<AdditiveCA>(&node_))
            return "additive-ca p=" + std::to_string(ca->p) + " rule=" + to_string(ca->rule) +
                   " seed=" + word_string(ca->seed);
        if (const auto* fd = std::get_if<FourDot>(&node_))
            return "fourdot r=" + word_string(fd->r) + " s=" + word_string(fd->s);
        if (const auto* sl = std::get_if<SublatticeLines>(&node_)) {
            switch (sl->part) {
                case SublatticePart::Horizontal: return "sublattice-lines (horizontal part)";
                case SublatticePart::Vertical: return "sublattice-lines (vertical part)";
                default: return "sublattice-lines";
            }
        }
        if (const auto* s = std::get_if<Sum>(&node_))
            return "sum(" + s->left->describe() + ", " + s->right->describe() + ")";
        return "zlift(" + std::get<ZLift>(node_).base->describe() + ")";
    }

  private:
    explicit ConfigSource(Node node) : node_(std::move(node)) {}

    static std::string word_string(const std::vector<int>& w) {
        std::string out;
        bool digits = std::all_of(w.begin(), w.end(), [](int v) { return v >= 0 && v <= 9; });
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (digits)
                out += static_cast<char>('0' + w[i]);
            else
                out += (i ? " " : "") + std::to_string(w[i]);
        }
        return out;
    }

    Node node_;
};

/// The non-periodic low-complexity source: a horizontal line of ones on even
/// columns of row 0 plus a vertical line of ones on even rows of column 1.
inline ConfigSource sublattice_counterexample() { return ConfigSource::sublattice_lines(); }

namespace detail {

inline long long wrap(long long v, long long m) {
    v %= m;
    return v < 0 ? v + m : v;
}

inline Window generate_torus(const ConfigSource::Torus& t, const Region& reg) {
    Window out(t.grid.ring(), reg);
    const Region g = t.grid.region();
    for (long long y = reg.y0; y < reg.y0 + reg.h; ++y)
        for (long long x = reg.x0; x < reg.x0 + reg.w; ++x)
            out.set(x, y, t.grid.at(g.x0 + wrap(x - g.x0, g.w), g.y0 + wrap(y - g.y0, g.h)));
    return out;
}

inline Window generate_additive_ca(const ConfigSource::AdditiveCA& ca, const Region& reg) {
    if (reg.y0 + reg.h - 1 > 0)
        throw std::domain_error("additive CA source: rows above the seed row are not derivable");
    const long long p = ca.p;
    std::vector<std::pair<long long, long long>> taps;  // (exponent, coefficient)
    for (const auto& [e, c] : ca.rule.terms()) taps.emplace_back(e.x, c.convert_to<long long>());
    const long long min_k = taps.front().first;
    const long long max_k = taps.back().first;

    // row 0 must stay wide enough that every emitted row keeps covering the
    // requested columns while each step trims max_k cells on the left and
    // -min_k on the right (signs matter for rules with negative exponents)
    const long long steps = std::max(0LL, -reg.y0);
    long long lo = reg.x0 - std::max(max_k, 0LL) * steps;
    long long hi = reg.x0 + reg.w - 1 - std::min(min_k, 0LL) * steps;

    // seed row j = 0, then c_{i,j-1} = sum_k rule_k * c_{i-k,j} going down
    const long long len = static_cast<long long>(ca.seed.size());
    std::vector<long long> row(static_cast<std::size_t>(hi - lo + 1));
    for (long long i = lo; i <= hi; ++i)
        row[static_cast<std::size_t>(i - lo)] = ca.seed[static_cast<std::size_t>(wrap(i, len))];

    Window out(RingSpec::prime_field(ca.p), reg);
    const auto emit = [&](long long j) {
        if (j > reg.y0 + reg.h - 1) return;
        for (long long x = reg.x0; x < reg.x0 + reg.w; ++x)
            out.set(x, j, row[static_cast<std::size_t>(x - lo)]);
    };
    emit(0);
    for (long long j = 0; j > reg.y0; --j) {
        const long long nlo = lo + max_k;
        const long long nhi = hi + min_k;
        std::vector<long long> next(static_cast<std::size_t>(nhi - nlo + 1), 0);
        for (long long i = nlo; i <= nhi; ++i) {
            long long acc = 0;
            for (const auto& [k, c] : taps) acc += c * row[static_cast<std::size_t>(i - k - lo)];
            next[static_cast<std::size_t>(i - nlo)] = acc % p;
        }
        row = std::move(next);
        lo = nlo;
        hi = nhi;
        emit(j - 1);
    }
    return out;
}

inline Window generate_fourdot(const ConfigSource::FourDot& fd, const Region& reg) {
    Window out(RingSpec::prime_field(2), reg);
    const long long rl = static_cast<long long>(fd.r.size());
    const long long sl = static_cast<long long>(fd.s.size());
    for (long long y = reg.y0; y < reg.y0 + reg.h; ++y)
        for (long long x = reg.x0; x < reg.x0 + reg.w; ++x)
            out.set(x, y,
                    (fd.r[static_cast<std::size_t>(wrap(x, rl))] + fd.s[static_cast<std::size_t>(wrap(y, sl))]) % 2);
    return out;
}

inline Window generate_sublattice(const ConfigSource::SublatticeLines& sl, const Region& reg) {
    Window out(RingSpec::prime_field(2), reg);
    for (long long y = reg.y0; y < reg.y0 + reg.h; ++y)
        for (long long x = reg.x0; x < reg.x0 + reg.w; ++x) {
            const int hval = (y == 0 && wrap(x, 2) == 0) ? 1 : 0;
            const int vval = (x == 1 && wrap(y, 2) == 0) ? 1 : 0;
            int v = 0;
            switch (sl.part) {
                case SublatticePart::Sum: v = hval + vval; break;
                case SublatticePart::Horizontal: v = hval; break;
                case SublatticePart::Vertical: v = vval; break;
            }
            out.set(x, y, v);
        }
    return out;
}

}  // namespace detail

/// Exact values of the configuration on a rectangle.
inline Window generate_window(const ConfigSource& src, const Region& reg) {
    if (const auto* t = std::get_if<ConfigSource::Torus>(&src.node()))
        return detail::generate_torus(*t, reg);
    if (const auto* ca = std::get_if<ConfigSource::AdditiveCA>(&src.node()))
        return detail::generate_additive_ca(*ca, reg);
    if (const auto* fd = std::get_if<ConfigSource::FourDot>(&src.node()))
        return detail::generate_fourdot(*fd, reg);
    if (const auto* sl = std::get_if<ConfigSource::SublatticeLines>(&src.node()))
        return detail::generate_sublattice(*sl, reg);
    if (const auto* s = std::get_if<ConfigSource::Sum>(&src.node())) {
        Window left = generate_window(*s->left, reg);
        const Window right = generate_window(*s->right, reg);
        Window out(left.ring(), reg);
        for (long long y = reg.y0; y < reg.y0 + reg.h; ++y)
            for (long long x = reg.x0; x < reg.x0 + reg.w; ++x)
                out.set(x, y, left.at(x, y) + right.at(x, y));
        return out;
    }
    return zlift(generate_window(*std::get<ConfigSource::ZLift>(src.node()).base, reg));
}

/// Window of f*c on the largest rectangle whose inputs lie inside win, with
/// the product convention (fc)_n = sum_u f_u c_{n-u}. Multiplying by a
/// monomial X^i Y^j is exactly translation by (i,j).
inline Window apply_poly(const LaurentPoly& f, const Window& win) {
    require_same_ring(f.ring(), win.ring(), "apply_poly");
    const Region r = win.region();
    if (f.is_zero()) return Window(win.ring(), r);
    const long long min_x = f.min_x(), max_x = f.max_x();
    const long long min_y = f.min_y(), max_y = f.max_y();
    const Region out_region{r.x0 + max_x, r.y0 + max_y, r.w - (max_x - min_x), r.h - (max_y - min_y)};
    if (out_region.w < 1 || out_region.h < 1)
        throw std::domain_error("apply_poly: output region is empty");
    Window out(win.ring(), out_region);
    for (long long y = out_region.y0; y < out_region.y0 + out_region.h; ++y)
        for (long long x = out_region.x0; x < out_region.x0 + out_region.w; ++x) {
            Int acc(0);
            for (const auto& [u, c] : f.terms()) acc += c * win.at(x - u.x, y - u.y);
            out.set(x, y, std::move(acc));
        }
    return out;
}

enum class CertificateScope { ExactTorus, WindowRegion };

/// Membership evidence for the annihilator ideal: exact for torus sources,
/// window-scoped (not a proof) for everything else. The status is computed,
/// never asserted.
struct AnnihilatorCertificate {
    LaurentPoly poly;
    CertificateScope scope;
    Region region;  // fundamental domain or the verified (shrunken) region
    bool verified;
};

inline AnnihilatorCertificate check_annihilates(const LaurentPoly& f, const ConfigSource& src,
                                                const Region& region) {
    require_same_ring(f.ring(), src.ring(), "check_annihilates");
    if (const auto fd = src.torus_domain()) {
        // one fundamental domain with wraparound decides f*c = 0 globally
        const Window grid = generate_window(src, *fd);
        bool ok = true;
        for (long long y = fd->y0; ok && y < fd->y0 + fd->h; ++y)
            for (long long x = fd->x0; ok && x < fd->x0 + fd->w; ++x) {
                Int acc(0);
                for (const auto& [u, c] : f.terms())
                    acc += c * grid.at(fd->x0 + detail::wrap(x - u.x - fd->x0, fd->w),
                                       fd->y0 + detail::wrap(y - u.y - fd->y0, fd->h));
                if (f.ring().canonical(acc) != 0) ok = false;
            }
        return {f, CertificateScope::ExactTorus, *fd, ok};
    }
    const Window win = generate_window(src, region);
    const Window product = apply_poly(f, win);  // throws when the region is too small
    return {f, CertificateScope::WindowRegion, product.region(), product.all_zero()};
}

/// A translation vector that agrees with the window on their full overlap.
/// Window evidence only, not a proof of global periodicity.
struct PeriodObservation {
    ExpVec t;
    long long overlap_cells;
};

inline std::vector<PeriodObservation> detect_periods(const Window& win, long long bound) {
    if (bound < 1) throw std::invalid_argument("detect_periods: bound must be >= 1");
    const Region r = win.region();
    std::vector<PeriodObservation> out;
    for (long long tx = -bound; tx <= bound; ++tx)
        for (long long ty = -bound; ty <= bound; ++ty) {
            if (tx == 0 && ty == 0) continue;
            const long long xlo = std::max(r.x0, r.x0 + tx), xhi = std::min(r.x0 + r.w, r.x0 + r.w + tx);
            const long long ylo = std::max(r.y0, r.y0 + ty), yhi = std::min(r.y0 + r.h, r.y0 + r.h + ty);
            if (xlo >= xhi || ylo >= yhi) continue;
            bool agree = true;
            for (long long y = ylo; agree && y < yhi; ++y)
                for (long long x = xlo; agree && x < xhi; ++x)
                    if (win.at(x, y) != win.at(x - tx, y - ty)) agree = false;
            if (agree) out.push_back({{tx, ty}, (xhi - xlo) * (yhi - ylo)});
        }
    return out;
}

/// Split a window of the 4-dot subshift as c = h + v over F_2 with h constant
/// along rows of the anchor column and v along columns of the anchor row, and
/// report the integer identity c = h + v - 2d for d = (h and v).
struct FourDotDecomposition {
    Window h, v, d;
    bool mod2_identity;
    bool integer_identity;
};

inline FourDotDecomposition fourdot_decompose(const Window& win, ExpVec anchor = {0, 0}) {
    if (win.ring() != RingSpec::prime_field(2))
        throw std::invalid_argument("fourdot_decompose: window must be over F_2");
    const Region r = win.region();
    if (!win.contains(anchor.x, anchor.y))
        throw std::domain_error("fourdot_decompose: anchor row/column missing from window");

    const RingSpec f2 = RingSpec::prime_field(2);
    LaurentPoly fs = parse_poly("1 + X + Y + X*Y", f2);
    if (!apply_poly(fs, win).all_zero())
        throw std::domain_error("fourdot_decompose: window is not annihilated by (1+X)(1+Y)");

    FourDotDecomposition out{Window(f2, r), Window(f2, r), Window(f2, r), true, true};
    const Int corner = win.at(anchor.x, anchor.y);
    for (long long y = r.y0; y < r.y0 + r.h; ++y)
        for (long long x = r.x0; x < r.x0 + r.w; ++x) {
            const Int hv = win.at(anchor.x, y);
            const Int vv = (win.at(x, anchor.y) + corner) % 2;
            out.h.set(x, y, hv);
            out.v.set(x, y, vv);
            out.d.set(x, y, (hv == 1 && vv == 1) ? 1 : 0);
        }
    for (long long y = r.y0; y < r.y0 + r.h; ++y)
        for (long long x = r.x0; x < r.x0 + r.w; ++x) {
            const Int c = win.at(x, y);
            const Int h = out.h.at(x, y), v = out.v.at(x, y), d = out.d.at(x, y);
            if ((h + v) % 2 != c) out.mod2_identity = false;
            if (h + v - 2 * d != c) out.integer_identity = false;
        }
    return out;
}

/// Bounded search for an integer annihilator of a torus configuration that is
/// a product of monomial differences (X^i Y^j - 1), smallest factor count
/// first, then lexicographic exponents bounded by the torus periods.
inline std::optional<LaurentPoly> search_monomial_difference_annihilator(const ConfigSource& src,
                                                                         int max_factors) {
    const auto fd = src.torus_domain();
    if (!fd) throw std::invalid_argument("search_monomial_difference_annihilator: torus source required");
    const Window raw = generate_window(src, *fd);
    const Window grid = raw.ring().is_field() ? zlift(raw) : raw;

    const RingSpec zz = RingSpec::integers();
    std::vector<ExpVec> candidates;
    for (long long j = 1; j <= fd->h; ++j) candidates.push_back({0, j});
    for (long long i = 1; i <= fd->w; ++i)
        for (long long j = -fd->h; j <= fd->h; ++j) candidates.push_back({i, j});

    const auto annihilates = [&](const LaurentPoly& f) {
        for (long long y = fd->y0; y < fd->y0 + fd->h; ++y)
            for (long long x = fd->x0; x < fd->x0 + fd->w; ++x) {
                Int acc(0);
                for (const auto& [u, c] : f.terms())
                    acc += c * grid.at(fd->x0 + detail::wrap(x - u.x - fd->x0, fd->w),
                                       fd->y0 + detail::wrap(y - u.y - fd->y0, fd->h));
                if (acc != 0) return false;
            }
        return true;
    };

    std::optional<LaurentPoly> found;
    const auto factor = [&](const ExpVec& e) {
        LaurentPoly f(zz);
        f.add_term(e, 1);
        f.add_term({0, 0}, -1);
        return f;
    };
    // combinations with repetition over the candidate list, lexicographic
    const std::function<void(std::size_t, int, const LaurentPoly&)> rec =
        [&](std::size_t start, int remaining, const LaurentPoly& acc) {
            if (found) return;
            if (remaining == 0) {
                if (annihilates(acc)) found = acc;
                return;
            }
            for (std::size_t i = start; i < candidates.size() && !found; ++i)
                rec(i, remaining - 1, acc * factor(candidates[i]));
        };
    for (int m = 1; m <= max_factors && !found; ++m) rec(0, m, LaurentPoly::one(zz));
    return found;
}

}  // namespace algsub
