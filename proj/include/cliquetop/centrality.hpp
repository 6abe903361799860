#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cliquetop/adjacency.hpp"
#include "cliquetop/complex.hpp"
#include "cliquetop/error.hpp"

namespace cliquetop {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Measure { degree, gcc, gcc_normalized, betweenness, betweenness_normalized };

inline std::string_view to_string(Measure m) {
    switch (m) {
    case Measure::degree: return "degree";
    case Measure::gcc: return "gcc";
    case Measure::gcc_normalized: return "gcc_normalized";
    case Measure::betweenness: return "betweenness";
    case Measure::betweenness_normalized: return "betweenness_normalized";
    }
    return "unknown";
}

inline Measure parse_measure(std::string_view name) {
    for (auto m : {Measure::degree, Measure::gcc, Measure::gcc_normalized, Measure::betweenness,
                   Measure::betweenness_normalized}) {
        if (to_string(m) == name) return m;
    }
    throw ArgumentError("unknown measure '" + std::string(name) + "'");
}

/// Scores aligned with the complex's per-level simplex order. A level with an
/// empty vector carries no scores.
struct ScoreMap {
    Measure measure = Measure::degree;
    std::vector<std::vector<double>> levels;

    bool has_level(int k) const {
        return k >= 0 && static_cast<std::size_t>(k) < levels.size() && !levels[static_cast<std::size_t>(k)].empty();
    }

    double at(const SimplicialComplex& c, const Simplex& s) const {
        const int k = s.dimension();
        if (!has_level(k)) throw ArgumentError("no scores for dimension " + std::to_string(k));
        return levels[static_cast<std::size_t>(k)].at(c.require(s));
    }
};

// ---------------------------------------------------------------------------
// Maximal generalised degree

/// Sum of dim(γ) over facets γ that strictly contain `s`.
inline long long maximal_generalised_degree(const SimplicialComplex& c, const Simplex& s) {
    c.require(s);
    long long d = 0;
    c.for_each_facet_containing(s, [&](SimplexRef r, const Simplex& f) {
        if (f.size() > s.size()) d += r.dim;
    });
    return d;
}

inline std::vector<long long> level_degrees(const SimplicialComplex& c, int k) {
    std::vector<long long> out;
    for (const auto& s : c.level(k)) out.push_back(maximal_generalised_degree(c, s));
    return out;
}

inline ScoreMap degree_scores(const SimplicialComplex& c) {
    ScoreMap m{Measure::degree, {}};
    for (int k = 0; k <= c.dimension(); ++k) {
        auto d = level_degrees(c, k);
        m.levels.emplace_back(d.begin(), d.end());
    }
    return m;
}

// ---------------------------------------------------------------------------
// Generalised clustering coefficient

/// Number of adjacent pairs among the neighbors of simplex `i` in `adj`.
inline long long neighbor_adjacencies(const LevelAdjacency& adj, std::size_t i) {
    std::vector<char> is_neighbor(adj.size(), 0);
    for (const auto& n : adj.neighbors(i)) is_neighbor[n.index] = 1;
    long long count = 0;
    for (const auto& t : adj.neighbors(i)) {
        for (const auto& u : adj.neighbors(t.index)) {
            if (u.index > t.index && is_neighbor[u.index]) ++count;
        }
    }
    return count;
}

/// Neighbor adjacencies over D(D−1)/2; zero when D ≤ 1.
inline double gcc_value(long long adjacencies, long long degree) {
    if (degree <= 1) return 0.0;
    return static_cast<double>(adjacencies) / (static_cast<double>(degree) * static_cast<double>(degree - 1) / 2.0);
}

inline double generalised_clustering_coefficient(const SimplicialComplex& c, const Simplex& s) {
    const std::size_t i = c.require(s);
    const auto adj = weighted_adjacency_matrix(c, s.dimension());
    return gcc_value(neighbor_adjacencies(adj, i), maximal_generalised_degree(c, s));
}

inline std::vector<double> level_gcc(const SimplicialComplex& c, const LevelAdjacency& adj) {
    std::vector<double> out;
    const auto level = c.level(adj.level());
    out.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) {
        out.push_back(gcc_value(neighbor_adjacencies(adj, i), maximal_generalised_degree(c, level[i])));
    }
    return out;
}

inline ScoreMap gcc_scores(const SimplicialComplex& c) {
    ScoreMap m{Measure::gcc, {}};
    for (int k = 0; k <= c.dimension(); ++k) m.levels.push_back(level_gcc(c, weighted_adjacency_matrix(c, k)));
    return m;
}

/// Divides each score by the largest raw score of its dimension; all-zero
/// dimensions stay zero.
inline ScoreMap normalize_gcc(const ScoreMap& raw) {
    if (raw.measure != Measure::gcc && raw.measure != Measure::gcc_normalized) {
        throw ArgumentError("normalize_gcc expects clustering scores");
    }
    ScoreMap out{Measure::gcc_normalized, raw.levels};
    for (auto& lv : out.levels) {
        double hi = 0.0;
        for (double v : lv) hi = std::max(hi, v);
        for (double& v : lv) v = hi > 0.0 ? v / hi : 0.0;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Connectivity and distances

struct LevelComponents {
    int level = 0;
    /// Blocks of k-simplex indices, each sorted, ordered by their smallest member.
    std::vector<std::vector<std::size_t>> blocks;
    /// Block number of every k-simplex.
    std::vector<std::size_t> component_of;
};

inline LevelComponents level_components(const LevelAdjacency& adj) {
    LevelComponents out;
    out.level = adj.level();
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    out.component_of.assign(adj.size(), unset);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        if (out.component_of[s] != unset) continue;
        const std::size_t id = out.blocks.size();
        out.blocks.emplace_back();
        out.component_of[s] = id;
        stack.assign(1, s);
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            out.blocks[id].push_back(v);
            for (const auto& n : adj.neighbors(v)) {
                if (out.component_of[n.index] == unset) {
                    out.component_of[n.index] = id;
                    stack.push_back(n.index);
                }
            }
        }
        std::sort(out.blocks[id].begin(), out.blocks[id].end());
    }
    return out;
}

inline LevelComponents level_components(const SimplicialComplex& c, int k) {
    return level_components(weighted_adjacency_matrix(c, k));
}

/// Single-source minimum total strength to every k-simplex; nullopt where unreachable.
inline std::vector<std::optional<std::uint64_t>> shortest_distances(const LevelAdjacency& adj, std::size_t source) {
    std::vector<std::optional<std::uint64_t>> dist(adj.size());
    using Item = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist.at(source) = 0;
    pq.emplace(0, source);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d > *dist[v]) continue;
        for (const auto& n : adj.neighbors(v)) {
            const std::uint64_t nd = d + static_cast<std::uint64_t>(n.weight);
            if (!dist[n.index] || nd < *dist[n.index]) {
                dist[n.index] = nd;
                pq.emplace(nd, n.index);
            }
        }
    }
    return dist;
}

/// Length of a minimum-weight generalised walk between two k-simplices.
inline std::optional<std::uint64_t> shortest_path_length(const SimplicialComplex& c, int k, const Simplex& a,
                                                         const Simplex& b) {
    if (a.dimension() != k || b.dimension() != k) throw ArgumentError("endpoints must be k-simplices");
    const std::size_t ia = c.require(a);
    const std::size_t ib = c.require(b);
    if (ia == ib) return 0;
    return shortest_distances(weighted_adjacency_matrix(c, k), ia).at(ib);
}

/// Length of an explicit walk σ_1, γ_1, σ_2, …, γ_{n−1}, σ_n: the sum of the
/// connector dimensions. Every connector must be stored and contain both of its
/// neighbouring k-simplices.
inline std::uint64_t generalised_walk_length(const SimplicialComplex& c, std::span<const Simplex> stops,
                                             std::span<const Simplex> connectors) {
    if (stops.empty()) throw ArgumentError("a walk needs at least one simplex");
    if (connectors.size() + 1 != stops.size()) throw ArgumentError("a walk needs one connector per step");
    const int k = stops.front().dimension();
    std::uint64_t len = 0;
    for (std::size_t i = 0; i < connectors.size(); ++i) {
        const auto& a = stops[i];
        const auto& b = stops[i + 1];
        const auto& g = connectors[i];
        if (a.dimension() != k || b.dimension() != k) throw ArgumentError("walk mixes dimensions");
        if (a == b) throw ArgumentError("consecutive walk simplices must differ");
        if (!c.contains(a) || !c.contains(b) || !c.contains(g)) throw ArgumentError("walk leaves the complex");
        if (g.dimension() <= k || !g.contains(a) || !g.contains(b)) {
            throw ArgumentError("connector does not contain both of its simplices");
        }
        len += static_cast<std::uint64_t>(g.dimension());
    }
    return len;
}

// ---------------------------------------------------------------------------
// Generalised weighted betweenness

namespace detail {

inline bool add_count(std::uint64_t& dst, std::uint64_t x) { return !__builtin_add_overflow(dst, x, &dst); }
inline bool add_count(BigCount& dst, const BigCount& x) {
    dst += x;
    return true;
}

template <class Score, class Count>
Score count_ratio(const Count& num, const Count& den) {
    if constexpr (std::is_same_v<Score, double>) {
        return static_cast<double>(num) / static_cast<double>(den);
    } else {
        return Score(BigCount(num), BigCount(den));
    }
}

template <class Score, class Count>
struct BrandesWorkspace {
    explicit BrandesWorkspace(std::size_t n)
        : dist(n), done(n), sigma(n), preds(n), delta(n) {}

    std::vector<std::uint64_t> dist;
    std::vector<char> done;
    std::vector<Count> sigma;
    std::vector<std::vector<std::size_t>> preds;
    std::vector<std::size_t> order;
    std::vector<Score> delta;
};

/// Adds the dependencies of `source` to `acc`. Returns false when a path count
/// overflows `Count`.
template <class Score, class Count>
bool accumulate_source(const LevelAdjacency& adj, std::size_t source, BrandesWorkspace<Score, Count>& ws,
                       std::vector<Score>& acc) {
    constexpr auto inf = std::numeric_limits<std::uint64_t>::max();
    std::fill(ws.dist.begin(), ws.dist.end(), inf);
    std::fill(ws.done.begin(), ws.done.end(), 0);
    for (auto& p : ws.preds) p.clear();
    ws.order.clear();

    using Item = std::pair<std::uint64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    ws.dist[source] = 0;
    ws.sigma[source] = 1;
    pq.emplace(0, source);
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (ws.done[v] || d > ws.dist[v]) continue;
        ws.done[v] = 1;
        ws.order.push_back(v);
        for (const auto& n : adj.neighbors(v)) {
            const std::size_t w = n.index;
            if (ws.done[w]) continue;
            const std::uint64_t nd = d + static_cast<std::uint64_t>(n.weight);
            if (nd < ws.dist[w]) {
                ws.dist[w] = nd;
                ws.sigma[w] = ws.sigma[v];
                ws.preds[w].assign(1, v);
                pq.emplace(nd, w);
            } else if (nd == ws.dist[w]) {
                if (!add_count(ws.sigma[w], ws.sigma[v])) return false;
                ws.preds[w].push_back(v);
            }
        }
    }

    for (std::size_t v : ws.order) ws.delta[v] = Score(0);
    for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
        const std::size_t w = *it;
        const Score carry = Score(1) + ws.delta[w];
        for (std::size_t v : ws.preds[w]) {
            ws.delta[v] += count_ratio<Score>(ws.sigma[v], ws.sigma[w]) * carry;
        }
        if (w != source) acc[w] += ws.delta[w];
    }
    return true;
}

struct CountOverflow {};

template <class Score, class Count>
std::vector<Score> pair_dependencies(const LevelAdjacency& adj, unsigned threads) {
    const std::size_t n = adj.size();
    constexpr std::size_t block = 32;
    const std::size_t blocks = (n + block - 1) / block;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t wave = std::max<std::size_t>(1, std::min<std::size_t>(threads, blocks));

    std::vector<Score> total(n, Score(0));
    std::vector<std::vector<Score>> partial(wave, std::vector<Score>(n, Score(0)));
    std::atomic<bool> overflow{false};

    auto run_block = [&](std::size_t b, std::vector<Score>& out, BrandesWorkspace<Score, Count>& ws) {
        std::fill(out.begin(), out.end(), Score(0));
        for (std::size_t s = b * block; s < std::min(n, (b + 1) * block) && !overflow; ++s) {
            if (!accumulate_source(adj, s, ws, out)) overflow = true;
        }
    };

    // Blocks are summed in index order regardless of thread count, so results
    // are bit-identical across runs.
    for (std::size_t first = 0; first < blocks; first += wave) {
        const std::size_t count = std::min(wave, blocks - first);
        if (count == 1) {
            BrandesWorkspace<Score, Count> ws(n);
            run_block(first, partial[0], ws);
        } else {
            std::vector<std::jthread> pool;
            for (std::size_t t = 0; t < count; ++t) {
                pool.emplace_back([&, t] {
                    BrandesWorkspace<Score, Count> ws(n);
                    run_block(first + t, partial[t], ws);
                });
            }
        }
        if (overflow) throw CountOverflow{};
        for (std::size_t t = 0; t < count; ++t) {
            for (std::size_t i = 0; i < n; ++i) total[i] += partial[t][i];
        }
    }
    return total;
}

} // namespace detail

/// Generalised weighted betweenness of every k-simplex, from a prebuilt A^wk.
///
/// Shortest paths minimise total strength. Each unordered endpoint pair
/// contributes once; endpoints do not receive credit for their own pair.
/// Normalisation divides by (n−1)(n−2)/2 with n the size of the simplex's
/// level-k component; components with n ≤ 2 score zero.
///
/// `Score` is `double` or `Rational`. Path counts run in 64-bit integers and
/// switch to arbitrary precision when a count would overflow.
template <class Score = double>
std::vector<Score> level_betweenness(const LevelAdjacency& adj, bool normalized, unsigned threads = 0) {
    std::vector<Score> scores;
    try {
        scores = detail::pair_dependencies<Score, std::uint64_t>(adj, threads);
    } catch (const detail::CountOverflow&) {
        scores = detail::pair_dependencies<Score, BigCount>(adj, threads);
    }
    for (auto& v : scores) v /= Score(2);

    if (normalized) {
        const auto comps = level_components(adj);
        for (std::size_t i = 0; i < scores.size(); ++i) {
            const auto n = static_cast<long long>(comps.blocks[comps.component_of[i]].size());
            if (n <= 2) {
                scores[i] = Score(0);
            } else {
                scores[i] /= Score((n - 1) * (n - 2)) / Score(2);
            }
        }
    }
    return scores;
}

template <class Score = double>
std::vector<Score> level_betweenness(const SimplicialComplex& c, int k, bool normalized, unsigned threads = 0) {
    return level_betweenness<Score>(weighted_adjacency_matrix(c, k), normalized, threads);
}

/// Betweenness of the k-simplices, reported as a ScoreMap holding level k only.
inline ScoreMap generalised_weighted_betweenness(const SimplicialComplex& c, int k, bool normalized,
                                                 unsigned threads = 0) {
    if (c.level_size(k) == 0) throw ArgumentError("level " + std::to_string(k) + " is empty");
    ScoreMap m{normalized ? Measure::betweenness_normalized : Measure::betweenness, {}};
    m.levels.resize(static_cast<std::size_t>(k) + 1);
    m.levels[static_cast<std::size_t>(k)] = level_betweenness<double>(c, k, normalized, threads);
    return m;
}

inline ScoreMap betweenness_scores(const SimplicialComplex& c, bool normalized, unsigned threads = 0) {
    ScoreMap m{normalized ? Measure::betweenness_normalized : Measure::betweenness, {}};
    for (int k = 0; k <= c.dimension(); ++k) m.levels.push_back(level_betweenness<double>(c, k, normalized, threads));
    return m;
}

} // namespace cliquetop
