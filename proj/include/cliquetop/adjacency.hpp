#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

#include "cliquetop/complex.hpp"
#include "cliquetop/error.hpp"
#include "cliquetop/simplex.hpp"

namespace cliquetop {

/// Largest dimension of a stored simplex containing both `a` and `b`; 0 when none does.
///
/// Any simplex containing a ∪ b is a face of some facet containing a ∪ b,
/// so scanning facets is enough.
inline int strength(const SimplicialComplex& c, const Simplex& a, const Simplex& b) {
    if (a.dimension() != b.dimension()) throw ArgumentError("strength needs simplices of equal dimension");
    if (a == b) throw ArgumentError("strength needs two distinct simplices");
    c.require(a);
    c.require(b);
    const Simplex u = set_union(a, b);
    int best = 0;
    c.for_each_facet_containing(u, [&](SimplexRef r, const Simplex&) { best = std::max(best, r.dim); });
    return best;
}

struct AdjacencyEntry {
    std::size_t row;
    std::size_t col;
    int weight;
    friend bool operator==(const AdjacencyEntry&, const AdjacencyEntry&) = default;
};

/// Weighted simplicial adjacency over the k-simplices of one level.
///
/// Stored sparse: sorted neighbor lists per row, symmetric, zero diagonal.
class LevelAdjacency {
public:
    struct Neighbor {
        std::size_t index;
        int weight;
    };

    LevelAdjacency() = default;
    LevelAdjacency(int level, std::vector<Simplex> index, std::vector<std::vector<Neighbor>> rows)
        : level_(level), index_(std::move(index)), rows_(std::move(rows)) {}

    int level() const noexcept { return level_; }
    std::size_t size() const noexcept { return index_.size(); }
    std::span<const Simplex> index() const noexcept { return index_; }
    std::span<const Neighbor> neighbors(std::size_t i) const { return rows_.at(i); }

    int at(std::size_t i, std::size_t j) const {
        const auto& row = rows_.at(i);
        auto it = std::lower_bound(row.begin(), row.end(), j,
                                   [](const Neighbor& n, std::size_t x) { return n.index < x; });
        return (it != row.end() && it->index == j) ? it->weight : 0;
    }

    long long row_sum(std::size_t i) const {
        long long s = 0;
        for (const auto& n : rows_.at(i)) s += n.weight;
        return s;
    }

    std::size_t nonzero_count() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }

    /// Upper-triangle coordinate triplets (row < col), row-major.
    std::vector<AdjacencyEntry> triplets() const {
        std::vector<AdjacencyEntry> out;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (const auto& n : rows_[i]) {
                if (n.index > i) out.push_back({i, n.index, n.weight});
            }
        }
        return out;
    }

    /// Dense row-major rendering. Throws ArgumentError above `max_size` simplices.
    std::vector<std::vector<int>> dense(std::size_t max_size = 4096) const {
        if (size() > max_size) {
            throw ArgumentError("level has " + std::to_string(size()) +
                                " simplices; dense rendering is capped at " + std::to_string(max_size));
        }
        std::vector<std::vector<int>> m(size(), std::vector<int>(size(), 0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            for (const auto& n : rows_[i]) m[i][n.index] = n.weight;
        }
        return m;
    }

private:
    int level_ = 0;
    std::vector<Simplex> index_;
    std::vector<std::vector<Neighbor>> rows_;
};

/// A^wk for level `k`: entry (i, j) is strength(σ_i, σ_j), index order is the
/// complex's lexicographic order of k-simplices.
inline LevelAdjacency weighted_adjacency_matrix(const SimplicialComplex& c, int k) {
    if (k < 0 || k > c.dimension()) {
        throw ArgumentError("level " + std::to_string(k) + " is outside the complex dimension " +
                            std::to_string(c.dimension()));
    }
    const auto level = c.level(k);
    const std::size_t n = level.size();

    // Two k-simplices are adjacent iff some facet contains both; take the
    // largest such facet per pair.
    std::vector<std::tuple<std::size_t, std::size_t, int>> pairs;
    std::vector<std::size_t> members;
    for (const auto& r : c.facet_refs()) {
        if (r.dim <= k) continue;
        const Simplex& f = c.at(r);
        members.clear();
        for_each_combination(f.vertices(), static_cast<std::size_t>(k) + 1, [&](std::span<const VertexId> vs) {
            members.push_back(*c.index_of(Simplex::from_sorted({vs.begin(), vs.end()})));
        });
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                pairs.emplace_back(members[a], members[b], r.dim);
                pairs.emplace_back(members[b], members[a], r.dim);
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());

    std::vector<std::vector<LevelAdjacency::Neighbor>> rows(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [i, j, w] = pairs[p];
        // Sorted ascending: the last entry of each (i, j) run holds the maximum.
        if (p + 1 < pairs.size() && std::get<0>(pairs[p + 1]) == i && std::get<1>(pairs[p + 1]) == j) continue;
        rows[i].push_back({j, w});
    }
    return LevelAdjacency(k, std::vector<Simplex>(level.begin(), level.end()), std::move(rows));
}

} // namespace cliquetop
