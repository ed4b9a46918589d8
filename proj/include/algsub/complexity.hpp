#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "config.hpp"
#include "linalg.hpp"

namespace algsub {

/// Finite nonempty subset of Z^2, deduplicated and in canonical (lex) order.
class Shape {
  public:
    static Shape from_cells(std::vector<ExpVec> cells) {
        if (cells.empty()) throw std::invalid_argument("Shape: empty cell set");
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        return Shape(std::move(cells));
    }

    static Shape block(long long w, long long h) {
        if (w < 1 || h < 1) throw std::invalid_argument("Shape::block: size must be at least 1x1");
        std::vector<ExpVec> cells;
        cells.reserve(static_cast<std::size_t>(w * h));
        for (long long i = 0; i < w; ++i)
            for (long long j = 0; j < h; ++j) cells.push_back({i, j});
        return from_cells(std::move(cells));
    }

    /// {0, step, ..., (n-1)*step}^2
    static Shape scattered_square(long long n, long long step) {
        if (n < 1 || step < 1) throw std::invalid_argument("scattered_square: n and step must be >= 1");
        std::vector<ExpVec> cells;
        cells.reserve(static_cast<std::size_t>(n * n));
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j) cells.push_back({i * step, j * step});
        return from_cells(std::move(cells));
    }

    const std::vector<ExpVec>& cells() const noexcept { return cells_; }
    std::size_t size() const noexcept { return cells_.size(); }

    long long min_x() const { return extreme(true, true); }
    long long max_x() const { return extreme(true, false); }
    long long min_y() const { return extreme(false, true); }
    long long max_y() const { return extreme(false, false); }

  private:
    explicit Shape(std::vector<ExpVec> cells) : cells_(std::move(cells)) {}

    long long extreme(bool use_x, bool want_min) const {
        long long best = use_x ? cells_[0].x : cells_[0].y;
        for (const auto& c : cells_) {
            const long long v = use_x ? c.x : c.y;
            if (want_min ? v < best : v > best) best = v;
        }
        return best;
    }

    std::vector<ExpVec> cells_;
};

/// Distinct shape-patterns observed over a sample region. `exact` is set when
/// the source is a torus and the region covers a full fundamental domain, so
/// the set is all of P(c,D); otherwise it is a lower bound.
struct PatternSet {
    Shape shape;
    std::set<std::vector<Int>> patterns;
    Region region;
    bool exact;
};

namespace detail {

inline Region expand_by_shape(const Region& region, const Shape& shape) {
    return {region.x0 + shape.min_x(), region.y0 + shape.min_y(),
            region.w + (shape.max_x() - shape.min_x()), region.h + (shape.max_y() - shape.min_y())};
}

}  // namespace detail

inline PatternSet enumerate_patterns(const ConfigSource& src, const Shape& shape, const Region& region) {
    const Window win = generate_window(src, detail::expand_by_shape(region, shape));
    std::set<std::vector<Int>> patterns;
    std::vector<Int> tuple(shape.size());
    for (long long ty = region.y0; ty < region.y0 + region.h; ++ty)
        for (long long tx = region.x0; tx < region.x0 + region.w; ++tx) {
            for (std::size_t k = 0; k < shape.size(); ++k) {
                const ExpVec& c = shape.cells()[k];
                tuple[k] = win.at(tx + c.x, ty + c.y);
            }
            patterns.insert(tuple);
        }
    const auto fd = src.torus_domain();
    const bool exact = fd && region.w >= fd->w && region.h >= fd->h;
    return {shape, std::move(patterns), region, exact};
}

struct ComplexityResult {
    long long count;
    long long shape_size;
    bool is_low;  // count <= |D|
    bool exact;
};

inline ComplexityResult complexity_count(const ConfigSource& src, const Shape& shape, const Region& region) {
    const PatternSet ps = enumerate_patterns(src, shape, region);
    const long long count = static_cast<long long>(ps.patterns.size());
    const long long size = static_cast<long long>(ps.shape.size());
    return {count, size, count <= size, ps.exact};
}

/// Constructive low-complexity-to-annihilator path: collect the observed
/// D-patterns as matrix rows over the requested ring and search for a nonzero
/// vector orthogonal to all of them. A kernel vector a yields the annihilator
/// f = sum_u a_u X^{-u1} Y^{-u2}, so that (fc)_t = sum_u a_u c_{t+u} = 0 on
/// every sampled translate. If the homogeneous kernel is trivial, an affine
/// relation sum a_u c_{t+u} = -b is tried instead and wrapped as (X-1)*f,
/// which annihilates because shifting kills constants. The certificate is
/// re-verified by check_annihilates; absence is a value, not an error.
inline std::optional<AnnihilatorCertificate> annihilator_from_kernel(const ConfigSource& src,
                                                                     const Shape& shape,
                                                                     const Region& region,
                                                                     RingSpec ring) {
    const PatternSet ps = enumerate_patterns(src, shape, region);
    const std::size_t ncols = shape.size();

    bool affine = false;
    std::vector<Int> avec_int;  // kernel vector over the shape cells

    if (ring.is_field()) {
        const long long p = ring.characteristic();
        std::vector<std::vector<long long>> rows;
        rows.reserve(ps.patterns.size());
        for (const auto& pat : ps.patterns) {
            std::vector<long long> row(ncols);
            for (std::size_t k = 0; k < ncols; ++k)
                row[k] = ring.canonical(pat[k]).convert_to<long long>();
            rows.push_back(std::move(row));
        }
        auto vec = kernel_mod_p(rows, ncols, p);
        if (!vec) {
            for (auto& row : rows) row.push_back(1);
            if (auto wide = kernel_mod_p(rows, ncols + 1, p)) {
                affine = true;
                wide->resize(ncols);
                vec = std::move(wide);
            }
        }
        if (!vec) return std::nullopt;
        avec_int.assign(vec->begin(), vec->end());
    } else {
        std::vector<std::vector<Int>> rows;
        rows.reserve(ps.patterns.size());
        for (const auto& pat : ps.patterns) rows.push_back(pat);
        auto vec = kernel_integer(rows, ncols);
        if (!vec) {
            for (auto& row : rows) row.emplace_back(1);
            if (auto wide = kernel_integer(rows, ncols + 1)) {
                affine = true;
                wide->resize(ncols);
                vec = std::move(wide);
            }
        }
        if (!vec) return std::nullopt;
        avec_int = std::move(*vec);
    }

    LaurentPoly f(ring);
    for (std::size_t k = 0; k < ncols; ++k)
        if (avec_int[k] != 0) f.add_term(-shape.cells()[k], avec_int[k]);
    if (f.is_zero()) return std::nullopt;  // affine vector with trivial shape part cannot occur
    if (affine) {
        LaurentPoly shift_minus_one(ring);
        shift_minus_one.add_term({1, 0}, 1);
        shift_minus_one.add_term({0, 0}, -1);
        f = shift_minus_one * f;
    }

    const ConfigSource* check_src = &src;
    std::optional<ConfigSource> lifted;
    if (!(ring == src.ring())) {
        if (!ring.is_field() && src.ring().is_field())
            lifted.emplace(ConfigSource::zlift(src));
        else
            throw std::invalid_argument("annihilator_from_kernel: ring does not match the source");
        check_src = &*lifted;
    }
    try {
        return check_annihilates(f, *check_src, detail::expand_by_shape(region, shape));
    } catch (const std::domain_error&) {
        return std::nullopt;  // sample region too small to re-verify the wrapped relation
    }
}

}  // namespace algsub
