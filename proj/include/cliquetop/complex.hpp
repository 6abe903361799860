#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cliquetop/error.hpp"
#include "cliquetop/graph.hpp"
#include "cliquetop/simplex.hpp"

namespace cliquetop {

/// Position of a simplex inside a complex: its dimension and its index in that level.
struct SimplexRef {
    int dim = 0;
    std::size_t index = 0;
    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

/// Downward-closed, immutable simplex store.
///
/// Simplices are kept per dimension in lexicographic order, so an index into
/// `level(k)` is stable for the lifetime of the complex and is what every
/// per-level structure (adjacency matrices, score vectors, boundary matrices)
/// is aligned with.
class SimplicialComplex {
public:
    using Mask = std::vector<std::vector<char>>;

    SimplicialComplex() = default;

    /// Takes per-level simplex lists that must already form a downward-closed
    /// family. Each level is sorted and deduplicated. Throws ArgumentError when
    /// closure fails (or a simplex sits in the wrong level).
    static SimplicialComplex from_levels(std::vector<std::string> labels,
                                         std::vector<std::vector<Simplex>> levels) {
        for (std::size_t k = 0; k < levels.size(); ++k) {
            auto& lv = levels[k];
            std::sort(lv.begin(), lv.end());
            lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
            for (const auto& s : lv) {
                if (s.size() != k + 1) throw ArgumentError("simplex stored at the wrong level");
                for (VertexId v : s) {
                    if (v >= labels.size()) throw ArgumentError("simplex vertex has no label");
                }
            }
        }
        while (!levels.empty() && levels.back().empty()) levels.pop_back();

        SimplicialComplex c;
        c.labels_ = std::move(labels);
        c.levels_.resize(levels.size());
        for (std::size_t k = 0; k < levels.size(); ++k) c.levels_[k].simplices = std::move(levels[k]);
        c.finalize();
        for (std::size_t k = 1; k < c.levels_.size(); ++k) {
            for (const auto& s : c.levels_[k].simplices) {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (!c.contains(s.without(i))) {
                        throw ArgumentError("simplex family is not closed under taking faces");
                    }
                }
            }
        }
        return c;
    }

    /// The smallest complex containing every generator.
    static SimplicialComplex closure_of(std::vector<std::string> labels,
                                        std::span<const Simplex> generators) {
        std::size_t top = 0;
        for (const auto& g : generators) top = std::max(top, g.size());
        std::vector<std::unordered_set<Simplex, SimplexHash>> sets(top);
        for (const auto& g : generators) sets[g.size() - 1].insert(g);
        for (std::size_t k = top; k-- > 1;) {
            for (const auto& s : sets[k]) {
                for (std::size_t i = 0; i < s.size(); ++i) sets[k - 1].insert(s.without(i));
            }
        }
        std::vector<std::vector<Simplex>> levels(top);
        for (std::size_t k = 0; k < top; ++k) levels[k].assign(sets[k].begin(), sets[k].end());
        return from_levels(std::move(labels), std::move(levels));
    }

    /// Largest simplex dimension; -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    bool empty() const noexcept { return levels_.empty(); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::span<const Simplex> level(int k) const {
        if (k < 0 || k > dimension()) return {};
        return levels_[static_cast<std::size_t>(k)].simplices;
    }

    std::size_t level_size(int k) const { return level(k).size(); }

    const Simplex& at(SimplexRef r) const { return levels_.at(static_cast<std::size_t>(r.dim)).simplices.at(r.index); }

    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f;
        for (const auto& lv : levels_) f.push_back(lv.simplices.size());
        return f;
    }

    std::size_t total_size() const noexcept {
        std::size_t n = 0;
        for (const auto& lv : levels_) n += lv.simplices.size();
        return n;
    }

    std::optional<std::size_t> index_of(const Simplex& s) const {
        const int k = s.dimension();
        if (k < 0 || k > dimension()) return std::nullopt;
        const auto& idx = levels_[static_cast<std::size_t>(k)].index;
        auto it = idx.find(s);
        if (it == idx.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// Index of `s`, or ArgumentError when `s` is not stored.
    std::size_t require(const Simplex& s) const {
        auto i = index_of(s);
        if (!i) throw ArgumentError("simplex is not in the complex");
        return *i;
    }

    bool is_facet(int k, std::size_t i) const {
        return levels_.at(static_cast<std::size_t>(k)).facet.at(i) != 0;
    }

    bool is_facet(const Simplex& s) const { return is_facet(s.dimension(), require(s)); }

    /// Facets in (dimension, lexicographic) order.
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        for (const auto& r : facet_refs_) out.push_back(at(r));
        return out;
    }

    std::span<const SimplexRef> facet_refs() const noexcept { return facet_refs_; }

    /// Facets having `v` as a vertex; empty for vertices absent from the complex.
    std::span<const SimplexRef> facets_containing(VertexId v) const {
        if (v >= vertex_facets_.size()) return {};
        return vertex_facets_[v];
    }

    /// Facets that contain `s` (including `s` itself when it is a facet).
    template <class Fn>
    void for_each_facet_containing(const Simplex& s, Fn&& fn) const {
        if (s.empty()) return;
        VertexId pivot = s[0];
        for (VertexId v : s) {
            if (facets_containing(v).size() < facets_containing(pivot).size()) pivot = v;
        }
        for (const auto& r : facets_containing(pivot)) {
            const Simplex& f = at(r);
            if (f.size() >= s.size() && f.contains(s)) fn(r, f);
        }
    }

    /// Per-level all-false mask shaped like this complex.
    Mask empty_mask() const {
        Mask m(levels_.size());
        for (std::size_t k = 0; k < levels_.size(); ++k) m[k].assign(levels_[k].simplices.size(), 0);
        return m;
    }

    /// Marks every face of the simplices already marked in `mask`.
    void close_mask(Mask& mask) const {
        for (std::size_t k = levels_.size(); k-- > 1;) {
            for (std::size_t i = 0; i < levels_[k].simplices.size(); ++i) {
                if (mask[k][i]) mark_faces(mask, SimplexRef{static_cast<int>(k), i});
            }
        }
    }

    /// Marks `r` and all of its faces, stopping at faces already marked.
    void mark_with_faces(Mask& mask, SimplexRef r) const {
        auto& slot = mask[static_cast<std::size_t>(r.dim)][r.index];
        if (slot) return;
        slot = 1;
        if (r.dim > 0) mark_faces(mask, r);
    }

    /// Sub-complex made of the marked simplices. The mask must be downward closed.
    SimplicialComplex restricted_to(const Mask& mask) const {
        SimplicialComplex c;
        c.labels_ = labels_;
        c.levels_.resize(levels_.size());
        for (std::size_t k = 0; k < levels_.size(); ++k) {
            for (std::size_t i = 0; i < levels_[k].simplices.size(); ++i) {
                if (mask[k][i]) c.levels_[k].simplices.push_back(levels_[k].simplices[i]);
            }
        }
        while (!c.levels_.empty() && c.levels_.back().simplices.empty()) c.levels_.pop_back();
        c.finalize();
        return c;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        if (a.labels_ != b.labels_ || a.levels_.size() != b.levels_.size()) return false;
        for (std::size_t k = 0; k < a.levels_.size(); ++k) {
            if (a.levels_[k].simplices != b.levels_[k].simplices) return false;
        }
        return true;
    }

private:
    struct Level {
        std::vector<Simplex> simplices;
        std::vector<char> facet;
        std::unordered_map<Simplex, std::size_t, SimplexHash> index;
    };

    void mark_faces(Mask& mask, SimplexRef r) const {
        const Simplex& s = at(r);
        const auto below = static_cast<std::size_t>(r.dim - 1);
        for (std::size_t j = 0; j < s.size(); ++j) {
            auto fi = levels_[below].index.find(s.without(j));
            if (fi == levels_[below].index.end()) throw ArgumentError("complex is not downward closed");
            mark_with_faces(mask, SimplexRef{r.dim - 1, fi->second});
        }
    }

    void finalize() {
        for (auto& lv : levels_) {
            lv.index.clear();
            lv.index.reserve(lv.simplices.size());
            for (std::size_t i = 0; i < lv.simplices.size(); ++i) lv.index.emplace(lv.simplices[i], i);
            lv.facet.assign(lv.simplices.size(), 1);
        }
        // A simplex is a facet iff no simplex one dimension up contains it.
        for (std::size_t k = 1; k < levels_.size(); ++k) {
            auto& below = levels_[k - 1];
            for (const auto& s : levels_[k].simplices) {
                for (std::size_t j = 0; j < s.size(); ++j) {
                    auto it = below.index.find(s.without(j));
                    if (it != below.index.end()) below.facet[it->second] = 0;
                }
            }
        }
        facet_refs_.clear();
        vertex_facets_.assign(labels_.size(), {});
        for (std::size_t k = 0; k < levels_.size(); ++k) {
            for (std::size_t i = 0; i < levels_[k].simplices.size(); ++i) {
                if (!levels_[k].facet[i]) continue;
                SimplexRef r{static_cast<int>(k), i};
                facet_refs_.push_back(r);
                for (VertexId v : levels_[k].simplices[i]) vertex_facets_[v].push_back(r);
            }
        }
    }

    std::vector<std::string> labels_;
    std::vector<Level> levels_;
    std::vector<SimplexRef> facet_refs_;
    std::vector<std::vector<SimplexRef>> vertex_facets_;
};

/// Simplices of `c` that are properly contained in no other simplex.
inline std::vector<Simplex> facets(const SimplicialComplex& c) { return c.facets(); }

/// Enumerates maximal cliques with Tomita pivoting inside a degeneracy ordering.
/// `fn` receives each clique as a sorted vertex vector.
template <class Fn>
void for_each_maximal_clique(const Graph& g, Fn&& fn) {
    const std::size_t n = g.vertex_count();

    // Degeneracy order: repeatedly remove a minimum-degree vertex.
    std::vector<std::size_t> deg(n);
    std::set<std::pair<std::size_t, VertexId>> queue;
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.neighbors(v).size();
        queue.emplace(deg[v], v);
    }
    std::vector<std::size_t> position(n);
    std::vector<char> removed(n, 0);
    std::size_t next = 0;
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        position[v] = next++;
        for (VertexId u : g.neighbors(v)) {
            if (removed[u]) continue;
            queue.erase({deg[u], u});
            queue.emplace(--deg[u], u);
        }
    }

    std::vector<VertexId> clique;
    auto intersect = [&](const std::vector<VertexId>& set, VertexId v) {
        std::vector<VertexId> out;
        const auto& nb = g.neighbors(v);
        std::set_intersection(set.begin(), set.end(), nb.begin(), nb.end(), std::back_inserter(out));
        return out;
    };

    auto expand = [&](auto& self, std::vector<VertexId> cand, std::vector<VertexId> excl) -> void {
        if (cand.empty()) {
            if (excl.empty()) {
                std::vector<VertexId> sorted = clique;
                std::sort(sorted.begin(), sorted.end());
                fn(std::move(sorted));
            }
            return;
        }
        // Pivot maximizing |cand ∩ N(u)| over cand ∪ excl.
        VertexId pivot = cand.front();
        std::size_t best = 0;
        bool first = true;
        for (const auto* set : {&cand, &excl}) {
            for (VertexId u : *set) {
                const auto& nb = g.neighbors(u);
                std::size_t cnt = 0;
                auto a = cand.begin();
                auto b = nb.begin();
                while (a != cand.end() && b != nb.end()) {
                    if (*a < *b) ++a;
                    else if (*b < *a) ++b;
                    else { ++cnt; ++a; ++b; }
                }
                if (first || cnt > best) {
                    best = cnt;
                    pivot = u;
                    first = false;
                }
            }
        }
        std::vector<VertexId> branch;
        std::set_difference(cand.begin(), cand.end(), g.neighbors(pivot).begin(),
                            g.neighbors(pivot).end(), std::back_inserter(branch));
        for (VertexId v : branch) {
            clique.push_back(v);
            self(self, intersect(cand, v), intersect(excl, v));
            clique.pop_back();
            cand.erase(std::lower_bound(cand.begin(), cand.end(), v));
            excl.insert(std::lower_bound(excl.begin(), excl.end(), v), v);
        }
    };

    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[position[v]] = v;
    for (VertexId v : order) {
        std::vector<VertexId> later, earlier;
        for (VertexId u : g.neighbors(v)) {
            (position[u] > position[v] ? later : earlier).push_back(u);
        }
        clique.assign(1, v);
        expand(expand, std::move(later), std::move(earlier));
    }
}

struct CliqueComplexOptions {
    /// Largest simplex dimension kept; unbounded when empty.
    std::optional<int> max_dim;
    /// Upper bound on the total number of simplices.
    std::size_t max_simplices = 10'000'000;
};

/// The clique complex of `g`, truncated at `max_dim` when given.
inline SimplicialComplex clique_complex(const Graph& g, const CliqueComplexOptions& opts = {}) {
    if (opts.max_dim && *opts.max_dim < 1) throw ArgumentError("max_dim must be at least 1");
    const std::size_t size_cap =
        opts.max_dim ? static_cast<std::size_t>(*opts.max_dim) + 1 : static_cast<std::size_t>(-1);

    std::vector<std::unordered_set<Simplex, SimplexHash>> sets;
    std::size_t total = 0;
    for_each_maximal_clique(g, [&](std::vector<VertexId> clique) {
        const std::size_t top = std::min(clique.size(), size_cap);
        if (sets.size() < top) sets.resize(top);
        for (std::size_t s = top; s >= 1; --s) {
            for_each_combination(clique, s, [&](std::span<const VertexId> vs) {
                if (sets[s - 1].insert(Simplex::from_sorted({vs.begin(), vs.end()})).second) {
                    if (++total > opts.max_simplices) throw ComplexTooLarge(opts.max_simplices);
                }
            });
        }
    });

    std::vector<std::vector<Simplex>> levels(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k) {
        levels[k].assign(std::make_move_iterator(sets[k].begin()), std::make_move_iterator(sets[k].end()));
        sets[k].clear();
    }
    return SimplicialComplex::from_levels(g.labels(), std::move(levels));
}

/// Human-readable label form of a simplex, e.g. `[10,18,19]`.
inline std::string simplex_label(const SimplicialComplex& c, const Simplex& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ',';
        out += c.labels().at(s[i]);
    }
    out += ']';
    return out;
}

} // namespace cliquetop
