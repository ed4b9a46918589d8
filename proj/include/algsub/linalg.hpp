#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ring.hpp"
#include "unipoly.hpp"

namespace algsub {

/// Nonzero kernel vector of the row space over F_p via Gauss-Jordan, using
/// the first free column; nullopt at full column rank. The returned vector
/// is checked against every row before it is handed out.
inline std::optional<std::vector<long long>> kernel_mod_p(std::vector<std::vector<long long>> m,
                                                          std::size_t ncols, long long p) {
    for (auto& row : m) {
        if (row.size() != ncols) throw std::invalid_argument("kernel_mod_p: ragged matrix");
        for (auto& v : row) v = ((v % p) + p) % p;
    }
    const std::vector<std::vector<long long>> original = m;

    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::optional<std::size_t> free_col;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t pr = r;
        while (pr < m.size() && m[pr][col] == 0) ++pr;
        if (pr == m.size()) {
            if (!free_col) free_col = col;
            continue;
        }
        std::swap(m[r], m[pr]);
        const long long inv = uni::mod_inverse(m[r][col], p);
        for (auto& v : m[r]) v = v * inv % p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            const long long c = m[i][col];
            for (std::size_t j = 0; j < ncols; ++j) m[i][j] = ((m[i][j] - c * m[r][j]) % p + p) % p;
        }
        pivots.emplace_back(r, col);
        if (++r == m.size()) {
            for (std::size_t c2 = col + 1; c2 < ncols && !free_col; ++c2) free_col = c2;
            break;
        }
    }
    if (!free_col) return std::nullopt;

    std::vector<long long> x(ncols, 0);
    x[*free_col] = 1;
    for (const auto& [pr, pc] : pivots) x[pc] = (p - m[pr][*free_col] % p) % p;
    for (const auto& row : original) {
        long long acc = 0;
        for (std::size_t j = 0; j < ncols; ++j) acc = (acc + row[j] * x[j]) % p;
        if (acc != 0) throw std::logic_error("kernel_mod_p: verification failed");
    }
    return x;
}

namespace detail {

inline Int exact_div_int(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw std::logic_error("exact integer division left a remainder");
    return q;
}

}  // namespace detail

/// Nonzero integer kernel vector of the rational row space, computed by
/// fraction-free Gauss-Jordan elimination and cleared to a primitive vector
/// with positive leading entry; nullopt at full column rank.
inline std::optional<std::vector<Int>> kernel_integer(std::vector<std::vector<Int>> m,
                                                      std::size_t ncols) {
    for (const auto& row : m)
        if (row.size() != ncols) throw std::invalid_argument("kernel_integer: ragged matrix");
    const std::vector<std::vector<Int>> original = m;

    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    std::optional<std::size_t> free_col;
    Int prev(1);
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t pr = r;
        while (pr < m.size() && m[pr][col] == 0) ++pr;
        if (pr == m.size()) {
            if (!free_col) free_col = col;
            continue;
        }
        std::swap(m[r], m[pr]);
        const Int piv = m[r][col];
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r) continue;
            const Int factor = m[i][col];
            for (std::size_t j = 0; j < ncols; ++j) {
                if (j == col) continue;
                m[i][j] = detail::exact_div_int(piv * m[i][j] - factor * m[r][j], prev);
            }
            m[i][col] = 0;
        }
        prev = piv;
        pivots.emplace_back(r, col);
        if (++r == m.size()) {
            for (std::size_t c2 = col + 1; c2 < ncols && !free_col; ++c2) free_col = c2;
            break;
        }
    }
    if (!free_col) return std::nullopt;

    // pivot rows now read p_k * x_{c_k} + q_k * x_free = 0
    Int scale(1);
    for (const auto& [pr, pc] : pivots) {
        const Int& piv = m[pr][pc];
        scale = detail::exact_div_int(scale * piv, boost::multiprecision::gcd(scale, piv));
    }
    std::vector<Int> x(ncols, Int(0));
    x[*free_col] = scale;
    for (const auto& [pr, pc] : pivots)
        x[pc] = -m[pr][*free_col] * detail::exact_div_int(scale, m[pr][pc]);

    Int g(0);
    for (const auto& v : x) g = boost::multiprecision::gcd(g, v);
    for (auto& v : x) v /= g;
    for (const auto& v : x) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : x) w = -w;
        break;
    }
    for (const auto& row : original) {
        Int acc(0);
        for (std::size_t j = 0; j < ncols; ++j) acc += row[j] * x[j];
        if (acc != 0) throw std::logic_error("kernel_integer: verification failed");
    }
    return x;
}

}  // namespace algsub
