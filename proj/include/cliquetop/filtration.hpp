#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cliquetop/centrality.hpp"
#include "cliquetop/complex.hpp"
#include "cliquetop/homology.hpp"

namespace cliquetop {

/// Scores within this distance below a threshold still pass it.
inline constexpr double kThresholdSlack = 1e-12;

/// Scores every simplex of `c` at its own dimension.
inline ScoreMap score_all_simplices(const SimplicialComplex& c, Measure measure, unsigned threads = 0) {
    switch (measure) {
    case Measure::degree: return degree_scores(c);
    case Measure::gcc: return gcc_scores(c);
    case Measure::gcc_normalized: return normalize_gcc(gcc_scores(c));
    case Measure::betweenness: return betweenness_scores(c, false, threads);
    case Measure::betweenness_normalized: return betweenness_scores(c, true, threads);
    }
    throw ArgumentError("unknown measure");
}

inline void require_full_scores(const SimplicialComplex& c, const ScoreMap& scores) {
    for (int k = 0; k <= c.dimension(); ++k) {
        if (static_cast<int>(scores.levels.size()) <= k || scores.levels[static_cast<std::size_t>(k)].size() != c.level_size(k)) {
            throw ArgumentError("score map does not cover dimension " + std::to_string(k));
        }
    }
}

/// Simplices scoring at least `threshold`, together with all of their faces.
inline SimplicialComplex subcomplex_at(const SimplicialComplex& c, const ScoreMap& scores, double threshold) {
    require_full_scores(c, scores);
    auto mask = c.empty_mask();
    for (int k = 0; k <= c.dimension(); ++k) {
        const auto& lv = scores.levels[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < lv.size(); ++i) {
            if (lv[i] >= threshold - kThresholdSlack) mask[static_cast<std::size_t>(k)][i] = 1;
        }
    }
    c.close_mask(mask);
    return c.restricted_to(mask);
}

/// Distinct score values, descending. Values closer than the slack collapse
/// onto the larger one.
inline std::vector<double> auto_thresholds(const ScoreMap& scores) {
    std::vector<double> all;
    for (const auto& lv : scores.levels) all.insert(all.end(), lv.begin(), lv.end());
    std::sort(all.begin(), all.end(), std::greater<>());
    std::vector<double> out;
    for (double v : all) {
        if (out.empty() || out.back() - v > kThresholdSlack) out.push_back(v);
    }
    return out;
}

enum class Provenance { scored, face_closure };

inline std::string_view to_string(Provenance p) {
    return p == Provenance::scored ? "scored" : "face-closure";
}

struct AddedSimplex {
    Simplex simplex;
    Provenance provenance;
};

struct FiltrationStep {
    double threshold = 0.0;
    SimplicialComplex subcomplex;
    BettiVector betti;
    /// Simplices absent from the previous step, in (dimension, lexicographic) order.
    std::vector<AddedSimplex> added;
};

struct FiltrationReport {
    Measure measure = Measure::degree;
    std::vector<double> thresholds;
    std::vector<FiltrationStep> steps;
    /// Largest homology dimension reported in each step's Betti vector.
    int homology_dim = 0;
    /// Free-form remark carried into exported reports.
    std::string note;
};

struct FiltrationOptions {
    int homology_dim = 2;
    unsigned threads = 0;
    RankOptions rank;
};

/// Builds the nested sub-complexes for a strictly decreasing threshold list
/// (every distinct score, descending, when no list is given) and their Betti numbers.
inline FiltrationReport run_filtration(const SimplicialComplex& c, const ScoreMap& scores,
                                       std::optional<std::vector<double>> thresholds,
                                       const FiltrationOptions& opts = {}) {
    require_full_scores(c, scores);
    FiltrationReport report;
    report.measure = scores.measure;
    report.thresholds = thresholds ? std::move(*thresholds) : auto_thresholds(scores);
    for (std::size_t i = 1; i < report.thresholds.size(); ++i) {
        if (!(report.thresholds[i] < report.thresholds[i - 1])) {
            throw ArgumentError("thresholds must be strictly decreasing");
        }
    }
    if (opts.homology_dim < 0) throw ArgumentError("homology dimension must be non-negative");
    report.homology_dim = std::min(opts.homology_dim, std::max(c.dimension(), 0));
    if (scores.measure == Measure::betweenness || scores.measure == Measure::betweenness_normalized) {
        report.note = "betweenness is computed per level; all dimensions share one threshold scale";
    }

    std::vector<SimplexRef> order;
    for (int k = 0; k <= c.dimension(); ++k) {
        for (std::size_t i = 0; i < c.level_size(k); ++i) order.push_back({k, i});
    }
    auto score_of = [&](SimplexRef r) { return scores.levels[static_cast<std::size_t>(r.dim)][r.index]; };
    std::stable_sort(order.begin(), order.end(),
                     [&](SimplexRef a, SimplexRef b) { return score_of(a) > score_of(b); });

    auto mask = c.empty_mask();
    auto previous = mask;
    std::size_t next = 0;
    for (double delta : report.thresholds) {
        while (next < order.size() && score_of(order[next]) >= delta - kThresholdSlack) {
            c.mark_with_faces(mask, order[next]);
            ++next;
        }
        FiltrationStep step;
        step.threshold = delta;
        for (int k = 0; k <= c.dimension(); ++k) {
            const auto uk = static_cast<std::size_t>(k);
            for (std::size_t i = 0; i < mask[uk].size(); ++i) {
                if (previous[uk][i] && !mask[uk][i]) throw std::logic_error("filtration lost a simplex");
                if (mask[uk][i] && !previous[uk][i]) {
                    const auto p = score_of({k, i}) >= delta - kThresholdSlack ? Provenance::scored
                                                                               : Provenance::face_closure;
                    step.added.push_back({c.level(k)[i], p});
                }
            }
        }
        step.subcomplex = c.restricted_to(mask);
        report.steps.push_back(std::move(step));
        previous = mask;
    }

    unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, report.steps.size()));
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (std::size_t i = cursor++; i < report.steps.size(); i = cursor++) {
            report.steps[i].betti = betti_numbers(report.steps[i].subcomplex, report.homology_dim, opts.rank);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return report;
}

inline FiltrationReport run_filtration(const SimplicialComplex& c, Measure measure,
                                       std::optional<std::vector<double>> thresholds,
                                       const FiltrationOptions& opts = {}) {
    return run_filtration(c, score_all_simplices(c, measure, opts.threads), std::move(thresholds), opts);
}

} // namespace cliquetop
