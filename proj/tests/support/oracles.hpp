#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the adjacency, centrality or homology code it is compared with.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cliquetop/graph.hpp"
#include "cliquetop/simplex.hpp"

namespace oracle {

using cliquetop::Graph;
using cliquetop::Simplex;
using cliquetop::VertexId;
using Rational = boost::multiprecision::cpp_rational;

inline Graph random_graph(std::size_t n, double p, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Graph::Edge> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

inline Graph graph_from_pairs(std::size_t n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Graph::Edge> edges;
    for (auto [u, v] : pairs) edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    return Graph(n, std::move(edges));
}

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
    std::size_t count(const std::vector<char>& present) {
        std::size_t c = 0;
        for (std::size_t i = 0; i < parent.size(); ++i) c += present[i] && find(i) == i;
        return c;
    }
    std::vector<std::size_t> parent;
};

inline bool is_clique(const Graph& g, std::uint64_t mask) {
    const std::size_t n = g.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
        if (!(mask >> u & 1)) continue;
        for (std::size_t v = u + 1; v < n; ++v) {
            if ((mask >> v & 1) && !g.adjacent(static_cast<VertexId>(u), static_cast<VertexId>(v))) return false;
        }
    }
    return true;
}

/// Every clique of `g` (as a vertex bitmask) by exhaustive subset scan; n ≤ 20.
inline std::vector<std::uint64_t> all_cliques(const Graph& g) {
    std::vector<std::uint64_t> out;
    const std::uint64_t full = std::uint64_t{1} << g.vertex_count();
    for (std::uint64_t m = 1; m < full; ++m) {
        if (is_clique(g, m)) out.push_back(m);
    }
    return out;
}

inline std::uint64_t mask_of(const Simplex& s) {
    std::uint64_t m = 0;
    for (VertexId v : s) m |= std::uint64_t{1} << v;
    return m;
}

inline Simplex simplex_of(std::uint64_t m) {
    std::vector<VertexId> vs;
    for (VertexId v = 0; v < 64; ++v) {
        if (m >> v & 1) vs.push_back(v);
    }
    return Simplex(std::move(vs));
}

/// (size of the largest clique containing a ∪ b) − 1, or 0 when a ∪ b is not a clique.
inline int brute_strength(const Graph& g, const Simplex& a, const Simplex& b) {
    const std::uint64_t need = mask_of(a) | mask_of(b);
    int best = 0;
    for (auto m : all_cliques(g)) {
        if ((m & need) == need) best = std::max(best, std::popcount(m) - 1);
    }
    return best;
}

/// Strength matrix over `simplices` computed by brute_strength.
inline std::vector<std::vector<int>> brute_strength_matrix(const Graph& g, const std::vector<Simplex>& simplices) {
    const std::size_t n = simplices.size();
    const auto cliques = all_cliques(g);
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint64_t need = mask_of(simplices[i]) | mask_of(simplices[j]);
            int best = 0;
            for (auto m : cliques) {
                if ((m & need) == need) best = std::max(best, std::popcount(m) - 1);
            }
            w[i][j] = w[j][i] = best;
        }
    }
    return w;
}

/// Divides each score by (c−1)(c−2)/2 for its component size c; zero when c ≤ 2.
inline void normalize_by_component(const std::vector<std::vector<int>>& w, std::vector<Rational>& score) {
    const std::size_t n = w.size();
    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (w[i][j]) uf.unite(i, j);
        }
    }
    std::vector<long long> size(n, 0);
    for (std::size_t i = 0; i < n; ++i) ++size[uf.find(i)];
    for (std::size_t i = 0; i < n; ++i) {
        const long long c = size[uf.find(i)];
        score[i] = c <= 2 ? Rational(0) : score[i] / Rational((c - 1) * (c - 2), 2);
    }
}

/// Betweenness by listing every simple path between every unordered pair and
/// keeping the minimum-weight ones. Zero weight means "not adjacent".
/// Exponential; intended for a handful of nodes.
inline std::vector<Rational> brute_betweenness(const std::vector<std::vector<int>>& w, bool normalized) {
    const std::size_t n = w.size();
    std::vector<Rational> score(n, Rational(0));

    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
            std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
            std::vector<std::vector<std::size_t>> best_paths;
            std::vector<std::size_t> path{s};
            std::vector<char> on_path(n, 0);
            on_path[s] = 1;
            auto dfs = [&](auto& self, std::size_t v, std::uint64_t len) -> void {
                if (v == t) {
                    if (len < best) {
                        best = len;
                        best_paths.clear();
                    }
                    if (len == best) best_paths.push_back(path);
                    return;
                }
                for (std::size_t u = 0; u < n; ++u) {
                    if (w[v][u] == 0 || on_path[u]) continue;
                    on_path[u] = 1;
                    path.push_back(u);
                    self(self, u, len + static_cast<std::uint64_t>(w[v][u]));
                    path.pop_back();
                    on_path[u] = 0;
                }
            };
            dfs(dfs, s, 0);
            if (best_paths.empty()) continue;
            std::vector<std::size_t> through(n, 0);
            for (const auto& p : best_paths) {
                for (std::size_t i = 1; i + 1 < p.size(); ++i) ++through[p[i]];
            }
            for (std::size_t v = 0; v < n; ++v) {
                if (through[v]) score[v] += Rational(through[v]) / Rational(best_paths.size());
            }
        }
    }

    if (normalized) normalize_by_component(w, score);
    return score;
}

/// Betweenness by explicitly listing every minimum-weight path. Distances come
/// from Floyd–Warshall; the DFS only follows edges that stay on a shortest
/// route, so it scales to a few dozen nodes where brute_betweenness cannot.
inline std::vector<Rational> enumerated_betweenness(const std::vector<std::vector<int>>& w, bool normalized) {
    const std::size_t n = w.size();
    constexpr long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<std::vector<long long>> d(n, std::vector<long long>(n, inf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (w[i][j]) d[i][j] = w[i][j];
        }
    }
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
        }
    }

    std::vector<Rational> score(n, Rational(0));
    std::vector<std::size_t> path;
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
            if (d[s][t] >= inf) continue;
            std::vector<std::size_t> through(n, 0);
            std::size_t paths = 0;
            path.assign(1, s);
            auto dfs = [&](auto& self, std::size_t v, long long len) -> void {
                if (v == t) {
                    ++paths;
                    for (std::size_t i = 1; i + 1 < path.size(); ++i) ++through[path[i]];
                    return;
                }
                for (std::size_t u = 0; u < n; ++u) {
                    if (!w[v][u] || len + w[v][u] + d[u][t] != d[s][t]) continue;
                    path.push_back(u);
                    self(self, u, len + w[v][u]);
                    path.pop_back();
                }
            };
            dfs(dfs, s, 0);
            for (std::size_t v = 0; v < n; ++v) {
                if (through[v]) score[v] += Rational(through[v]) / Rational(paths);
            }
        }
    }
    if (normalized) normalize_by_component(w, score);
    return score;
}

/// Textbook unweighted Brandes on the graph itself (BFS, ordered pairs, halved).
/// Normalised by the vertex's connected-component size.
inline std::vector<double> graph_betweenness(const Graph& g, bool normalized) {
    const std::size_t n = g.vertex_count();
    std::vector<double> cb(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> stack;
        std::vector<std::vector<std::size_t>> pred(n);
        std::vector<double> sigma(n, 0.0);
        std::vector<long long> dist(n, -1);
        sigma[s] = 1;
        dist[s] = 0;
        std::queue<std::size_t> q;
        q.push(s);
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            stack.push_back(v);
            for (VertexId w : g.neighbors(static_cast<VertexId>(v))) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    pred[w].push_back(v);
                }
            }
        }
        std::vector<double> delta(n, 0.0);
        while (!stack.empty()) {
            auto w = stack.back();
            stack.pop_back();
            for (auto v : pred[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) cb[w] += delta[w];
        }
    }
    for (auto& v : cb) v /= 2.0;
    if (normalized) {
        UnionFind uf(n);
        for (auto [u, v] : g.edges()) uf.unite(u, v);
        std::vector<double> size(n, 0);
        for (std::size_t i = 0; i < n; ++i) ++size[uf.find(i)];
        for (std::size_t i = 0; i < n; ++i) {
            const double c = size[uf.find(i)];
            cb[i] = c <= 2 ? 0.0 : cb[i] / ((c - 1) * (c - 2) / 2.0);
        }
    }
    return cb;
}

/// Local clustering coefficient 2T / (d(d−1)); zero when d < 2.
inline std::vector<double> graph_clustering(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> out(n, 0.0);
    for (VertexId v = 0; v < n; ++v) {
        const auto& nb = g.neighbors(v);
        const double d = static_cast<double>(nb.size());
        if (nb.size() < 2) continue;
        std::size_t tri = 0;
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) tri += g.adjacent(nb[i], nb[j]);
        }
        out[v] = 2.0 * static_cast<double>(tri) / (d * (d - 1));
    }
    return out;
}

/// Connected components of the 1-skeleton given as the vertex and edge lists.
inline std::size_t skeleton_components(std::size_t label_count, const std::vector<Simplex>& vertices,
                                       const std::vector<Simplex>& edges) {
    UnionFind uf(label_count);
    std::vector<char> present(label_count, 0);
    for (const auto& v : vertices) present[v[0]] = 1;
    for (const auto& e : edges) uf.unite(e[0], e[1]);
    return uf.count(present);
}

/// Two triangles {1,2,3} and {4,5,6} bridged by the edge 3-4.
inline const char* bridged_triangles_edge_list() { return "1 2\n2 3\n1 3\n3 4\n4 5\n5 6\n4 6\n"; }

} // namespace oracle
