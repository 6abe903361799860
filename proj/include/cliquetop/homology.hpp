#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cliquetop/complex.hpp"
#include "cliquetop/error.hpp"

// Homology here is taken with coefficients in the two-element field. Ranks
// over that field give the Betti numbers of any complex without torsion in
// its integer homology.

namespace cliquetop {

/// Column-sparse matrix over the two-element field; each column lists the
/// rows holding a one, strictly increasing.
struct BinaryMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::uint32_t>> columns;

    bool is_zero() const {
        return std::all_of(columns.begin(), columns.end(), [](const auto& c) { return c.empty(); });
    }

    std::vector<std::vector<int>> dense() const {
        std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
        for (std::size_t j = 0; j < cols; ++j) {
            for (auto r : columns[j]) m[r][j] = 1;
        }
        return m;
    }
};

/// ∂_k: rows are the (k−1)-simplices, columns the k-simplices, both in the
/// complex's canonical order.
struct BoundaryMatrix : BinaryMatrix {
    int k = 0;
};

inline BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int k) {
    if (k < 1 || k > c.dimension()) {
        throw ArgumentError("boundary index " + std::to_string(k) + " outside 1.." + std::to_string(c.dimension()));
    }
    BoundaryMatrix m;
    m.k = k;
    m.rows = c.level_size(k - 1);
    m.cols = c.level_size(k);
    m.columns.reserve(m.cols);
    for (const auto& s : c.level(k)) {
        std::vector<std::uint32_t> col;
        col.reserve(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) col.push_back(static_cast<std::uint32_t>(c.require(s.without(i))));
        std::sort(col.begin(), col.end());
        m.columns.push_back(std::move(col));
    }
    return m;
}

/// a · b over the two-element field.
inline BinaryMatrix product_mod2(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols != b.rows) throw ArgumentError("matrix shapes do not compose");
    BinaryMatrix out{a.rows, b.cols, {}};
    std::vector<char> acc(a.rows);
    for (const auto& bcol : b.columns) {
        std::fill(acc.begin(), acc.end(), 0);
        for (auto j : bcol) {
            for (auto r : a.columns[j]) acc[r] ^= 1;
        }
        std::vector<std::uint32_t> col;
        for (std::size_t r = 0; r < a.rows; ++r) {
            if (acc[r]) col.push_back(static_cast<std::uint32_t>(r));
        }
        out.columns.push_back(std::move(col));
    }
    return out;
}

/// Rank via column reduction on bit-packed columns.
inline std::size_t dense_rank_mod2(const BinaryMatrix& m) {
    const std::size_t words = (m.rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> basis;
    std::vector<std::size_t> pivot_of_row(m.rows, static_cast<std::size_t>(-1));
    std::vector<std::uint64_t> col(words);
    for (const auto& entries : m.columns) {
        std::fill(col.begin(), col.end(), 0);
        for (auto r : entries) col[r / 64] |= std::uint64_t{1} << (r % 64);
        std::size_t w = words;
        while (true) {
            while (w > 0 && col[w - 1] == 0) --w;
            if (w == 0) break;
            const std::size_t low = (w - 1) * 64 + (63 - static_cast<std::size_t>(std::countl_zero(col[w - 1])));
            const std::size_t p = pivot_of_row[low];
            if (p == static_cast<std::size_t>(-1)) {
                pivot_of_row[low] = basis.size();
                basis.push_back(col);
                break;
            }
            const auto& b = basis[p];
            for (std::size_t i = 0; i < w; ++i) col[i] ^= b[i];
        }
    }
    return basis.size();
}

/// Rank via column reduction on sorted index lists.
inline std::size_t sparse_rank_mod2(const BinaryMatrix& m) {
    std::vector<std::vector<std::uint32_t>> basis;
    std::vector<std::size_t> pivot_of_row(m.rows, static_cast<std::size_t>(-1));
    std::vector<std::uint32_t> scratch;
    for (const auto& entries : m.columns) {
        std::vector<std::uint32_t> col = entries;
        while (!col.empty()) {
            const std::size_t p = pivot_of_row[col.back()];
            if (p == static_cast<std::size_t>(-1)) {
                pivot_of_row[col.back()] = basis.size();
                basis.push_back(std::move(col));
                break;
            }
            scratch.clear();
            const auto& b = basis[p];
            std::set_symmetric_difference(col.begin(), col.end(), b.begin(), b.end(), std::back_inserter(scratch));
            col.swap(scratch);
        }
    }
    return basis.size();
}

struct RankOptions {
    /// Matrices with fewer columns than this use bit-packed elimination.
    std::size_t dense_column_limit = 10'000;
};

inline std::size_t rank_mod2(const BinaryMatrix& m, const RankOptions& opts = {}) {
    return m.cols < opts.dense_column_limit ? dense_rank_mod2(m) : sparse_rank_mod2(m);
}

using BettiVector = std::vector<std::size_t>;

/// β_0..β_max_dim. Entries above the complex dimension are zero.
inline BettiVector betti_numbers(const SimplicialComplex& c, int max_dim = 2, const RankOptions& opts = {}) {
    if (max_dim < 0) throw ArgumentError("max_dim must be non-negative");
    const int top = std::min(max_dim + 1, c.dimension());
    // rank[k] = rank ∂_k for k in 1..top; rank ∂_0 = 0.
    std::vector<std::size_t> rank(static_cast<std::size_t>(std::max(top, 0)) + 2, 0);
    for (int k = 1; k <= top; ++k) rank[static_cast<std::size_t>(k)] = rank_mod2(boundary_matrix(c, k), opts);

    BettiVector betti(static_cast<std::size_t>(max_dim) + 1, 0);
    for (int k = 0; k <= max_dim && k <= c.dimension(); ++k) {
        const auto uk = static_cast<std::size_t>(k);
        betti[uk] = c.level_size(k) - rank[uk] - rank[uk + 1];
    }
    return betti;
}

} // namespace cliquetop
