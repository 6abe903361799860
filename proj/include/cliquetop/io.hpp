#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "cliquetop/adjacency.hpp"
#include "cliquetop/centrality.hpp"
#include "cliquetop/complex.hpp"
#include "cliquetop/error.hpp"
#include "cliquetop/filtration.hpp"
#include "cliquetop/homology.hpp"

namespace cliquetop::io {

using Json = nlohmann::ordered_json;

/// Shortest decimal text that reads back to the same double.
inline std::string format_number(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

// ---------------------------------------------------------------------------
// Complex

/// Canonical JSON: labels, simplices keyed by dimension, facet indices keyed
/// by dimension, f-vector. Compact, newline-terminated.
inline std::string complex_to_json(const SimplicialComplex& c) {
    Json j;
    j["labels"] = c.labels();
    Json simplices = Json::object();
    Json facets = Json::object();
    for (int k = 0; k <= c.dimension(); ++k) {
        Json level = Json::array();
        Json fl = Json::array();
        const auto lv = c.level(k);
        for (std::size_t i = 0; i < lv.size(); ++i) {
            level.push_back(std::vector<VertexId>(lv[i].begin(), lv[i].end()));
            if (c.is_facet(k, i)) fl.push_back(i);
        }
        simplices[std::to_string(k)] = std::move(level);
        facets[std::to_string(k)] = std::move(fl);
    }
    j["simplices"] = std::move(simplices);
    j["facets"] = std::move(facets);
    j["f_vector"] = c.f_vector();
    return j.dump() + "\n";
}

/// Reads the format written by complex_to_json. Facet lists are checked
/// against the recomputed facets.
inline SimplicialComplex complex_from_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid complex JSON: ") + e.what(), 0);
    }
    try {
        auto labels = j.at("labels").get<std::vector<std::string>>();
        const auto& simplices = j.at("simplices");
        std::vector<std::vector<Simplex>> levels(simplices.size());
        for (std::size_t k = 0; k < levels.size(); ++k) {
            for (const auto& s : simplices.at(std::to_string(k))) levels[k].emplace_back(s.get<std::vector<VertexId>>());
        }
        auto c = SimplicialComplex::from_levels(std::move(labels), std::move(levels));
        if (j.contains("f_vector") && j["f_vector"].get<std::vector<std::size_t>>() != c.f_vector()) {
            throw ParseError("f_vector does not match the stored simplices", 0);
        }
        if (j.contains("facets")) {
            for (int k = 0; k <= c.dimension(); ++k) {
                std::vector<std::size_t> expect;
                for (std::size_t i = 0; i < c.level_size(k); ++i) {
                    if (c.is_facet(k, i)) expect.push_back(i);
                }
                if (j["facets"].at(std::to_string(k)).get<std::vector<std::size_t>>() != expect) {
                    throw ParseError("facet list for dimension " + std::to_string(k) + " is inconsistent", 0);
                }
            }
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed complex JSON: ") + e.what(), 0);
    } catch (const ArgumentError& e) {
        throw ParseError(std::string("invalid complex: ") + e.what(), 0);
    }
}

// ---------------------------------------------------------------------------
// Adjacency

inline std::string adjacency_to_json(const SimplicialComplex& c, const LevelAdjacency& adj) {
    Json j;
    j["level"] = adj.level();
    j["size"] = adj.size();
    Json labels = Json::array();
    for (const auto& s : adj.index()) labels.push_back(simplex_label(c, s));
    j["simplices"] = std::move(labels);
    Json entries = Json::array();
    for (const auto& e : adj.triplets()) entries.push_back({e.row, e.col, e.weight});
    j["entries"] = std::move(entries);
    return j.dump() + "\n";
}

/// Dense CSV with a header row of simplex labels; refuses levels above `dense_limit`.
inline std::string adjacency_to_csv(const SimplicialComplex& c, const LevelAdjacency& adj,
                                    std::size_t dense_limit = 4096) {
    const auto m = adj.dense(dense_limit);
    std::string out = "simplex";
    for (const auto& s : adj.index()) out += "," + csv_field(simplex_label(c, s));
    out += '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        out += csv_field(simplex_label(c, adj.index()[i]));
        for (int v : m[i]) out += "," + std::to_string(v);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Scores

/// Column name used for a measure family in score exports.
inline std::string_view measure_family(Measure m) {
    switch (m) {
    case Measure::degree: return "degree";
    case Measure::gcc:
    case Measure::gcc_normalized: return "gcc";
    case Measure::betweenness:
    case Measure::betweenness_normalized: return "betweenness";
    }
    return "unknown";
}

/// One row per simplex: simplex, dimension, measure, raw, normalized. The
/// normalized column is empty when no normalized map is given.
inline std::string scores_to_csv(const SimplicialComplex& c, const ScoreMap& raw, const ScoreMap* normalized) {
    std::string out = "simplex,dimension,measure,raw,normalized\n";
    for (int k = 0; k <= c.dimension(); ++k) {
        if (!raw.has_level(k)) continue;
        const auto lv = c.level(k);
        for (std::size_t i = 0; i < lv.size(); ++i) {
            out += csv_field(simplex_label(c, lv[i]));
            out += "," + std::to_string(k) + "," + std::string(measure_family(raw.measure)) + ",";
            out += format_number(raw.levels[static_cast<std::size_t>(k)][i]) + ",";
            if (normalized && normalized->has_level(k)) {
                out += format_number(normalized->levels[static_cast<std::size_t>(k)][i]);
            }
            out += '\n';
        }
    }
    return out;
}

inline std::string scores_to_json(const SimplicialComplex& c, const ScoreMap& raw, const ScoreMap* normalized) {
    Json j;
    j["measure"] = std::string(measure_family(raw.measure));
    Json rows = Json::array();
    for (int k = 0; k <= c.dimension(); ++k) {
        if (!raw.has_level(k)) continue;
        const auto lv = c.level(k);
        for (std::size_t i = 0; i < lv.size(); ++i) {
            Json row;
            row["simplex"] = std::vector<std::string>();
            for (VertexId v : lv[i]) row["simplex"].push_back(c.labels()[v]);
            row["dimension"] = k;
            row["raw"] = raw.levels[static_cast<std::size_t>(k)][i];
            if (normalized && normalized->has_level(k)) {
                row["normalized"] = normalized->levels[static_cast<std::size_t>(k)][i];
            } else {
                row["normalized"] = nullptr;
            }
            rows.push_back(std::move(row));
        }
    }
    j["scores"] = std::move(rows);
    return j.dump(1) + "\n";
}

// ---------------------------------------------------------------------------
// Betti reports

inline std::string betti_header(std::size_t n, char sep, std::string_view first) {
    std::string out(first);
    for (std::size_t k = 0; k < n; ++k) out += sep + std::string("beta_") + std::to_string(k);
    return out + '\n';
}

inline std::string betti_to_csv(const BettiVector& b) {
    std::string out = betti_header(b.size(), ',', "complex");
    out += "full";
    for (auto v : b) out += "," + std::to_string(v);
    return out + '\n';
}

inline std::string betti_to_json(const SimplicialComplex& c, const BettiVector& b) {
    Json j;
    j["coefficients"] = "Z/2";
    j["f_vector"] = c.f_vector();
    j["betti"] = b;
    return j.dump() + "\n";
}

/// threshold,beta_0,beta_1,... one row per step.
inline std::string report_to_csv(const FiltrationReport& r) {
    std::string out = betti_header(static_cast<std::size_t>(r.homology_dim) + 1, ',', "threshold");
    for (const auto& s : r.steps) {
        out += format_number(s.threshold);
        for (auto v : s.betti) out += "," + std::to_string(v);
        out += '\n';
    }
    return out;
}

/// Plot data: delta, beta_0, beta_1, ... tab separated.
inline std::string report_to_tsv(const FiltrationReport& r) {
    std::string out = betti_header(static_cast<std::size_t>(r.homology_dim) + 1, '\t', "delta");
    for (const auto& s : r.steps) {
        out += format_number(s.threshold);
        for (auto v : s.betti) out += "\t" + std::to_string(v);
        out += '\n';
    }
    return out;
}

inline std::string report_to_json(const SimplicialComplex& c, const FiltrationReport& r) {
    Json j;
    j["measure"] = std::string(to_string(r.measure));
    j["coefficients"] = "Z/2";
    if (!r.note.empty()) j["note"] = r.note;
    j["thresholds"] = r.thresholds;
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json step;
        step["threshold"] = s.threshold;
        step["f_vector"] = s.subcomplex.f_vector();
        step["betti"] = s.betti;
        Json added = Json::array();
        for (const auto& a : s.added) {
            added.push_back({{"simplex", simplex_label(c, a.simplex)}, {"provenance", std::string(to_string(a.provenance))}});
        }
        step["added"] = std::move(added);
        steps.push_back(std::move(step));
    }
    j["steps"] = std::move(steps);
    return j.dump(1) + "\n";
}

} // namespace cliquetop::io
