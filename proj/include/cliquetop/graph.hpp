#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cliquetop/error.hpp"
#include "cliquetop/simplex.hpp"

namespace cliquetop {

/// Simple undirected graph on dense vertex ids with a label side table.
class Graph {
public:
    using Edge = std::pair<VertexId, VertexId>;

    Graph() = default;

    /// Builds from raw pairs; self-loops are dropped and duplicates merged.
    /// Labels default to the decimal vertex id.
    Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {})
        : labels_(std::move(labels)) {
        if (labels_.empty()) {
            labels_.reserve(vertex_count);
            for (std::size_t v = 0; v < vertex_count; ++v) labels_.push_back(std::to_string(v));
        }
        if (labels_.size() != vertex_count) {
            throw ArgumentError("label table size does not match vertex count");
        }
        for (auto& [u, v] : edges) {
            if (u >= vertex_count || v >= vertex_count) {
                throw ArgumentError("edge references a vertex outside the graph");
            }
            if (u == v) {
                ++self_loops_dropped_;
                continue;
            }
            if (u > v) std::swap(u, v);
            edges_.emplace_back(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        const auto before = edges_.size();
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        duplicates_dropped_ = before - edges_.size();

        neighbors_.assign(vertex_count, {});
        for (auto [u, v] : edges_) {
            neighbors_[u].push_back(v);
            neighbors_[v].push_back(u);
        }
        for (auto& n : neighbors_) std::sort(n.begin(), n.end());
    }

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return neighbors_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::size_t self_loops_dropped() const noexcept { return self_loops_dropped_; }
    std::size_t duplicates_dropped() const noexcept { return duplicates_dropped_; }

    bool adjacent(VertexId u, VertexId v) const {
        const auto& n = neighbors_.at(u);
        return std::binary_search(n.begin(), n.end(), v);
    }

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> neighbors_;
    std::size_t self_loops_dropped_ = 0;
    std::size_t duplicates_dropped_ = 0;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\r'; };
    while (i < line.size()) {
        while (i < line.size() && is_sep(line[i])) ++i;
        std::size_t j = i;
        while (j < line.size() && !is_sep(line[j])) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline bool parse_natural(std::string_view s, unsigned long long& out) {
    if (s.empty()) return false;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && p == s.data() + s.size();
}

} // namespace detail

/// Parses a line-oriented edge list.
///
/// Each non-blank line holds two labels separated by whitespace or commas.
/// Text after `#` is ignored. A line beginning with `vertices:` declares
/// labels (typically isolated vertices) without adding edges.
///
/// When every label is a non-negative integer, dense ids follow numeric
/// order; otherwise they follow first appearance.
inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::pair<VertexId, VertexId>> raw;

    auto intern = [&](std::string_view label) {
        auto [it, inserted] = ids.try_emplace(std::string(label), static_cast<VertexId>(labels.size()));
        if (inserted) labels.emplace_back(label);
        return it->second;
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        line = line.substr(first);

        constexpr std::string_view kVertices = "vertices:";
        if (line.starts_with(kVertices)) {
            for (auto tok : detail::split_tokens(line.substr(kVertices.size()))) intern(tok);
            continue;
        }

        auto toks = detail::split_tokens(line);
        if (toks.size() != 2) {
            throw ParseError("expected two vertex labels, found " + std::to_string(toks.size()),
                             line_no);
        }
        VertexId u = intern(toks[0]);
        VertexId v = intern(toks[1]);
        raw.emplace_back(u, v);
    }

    // Relabel numerically when every label is an integer.
    std::vector<unsigned long long> numeric(labels.size());
    bool all_numeric = !labels.empty();
    for (std::size_t i = 0; i < labels.size() && all_numeric; ++i) {
        all_numeric = detail::parse_natural(labels[i], numeric[i]);
    }
    if (all_numeric) {
        std::vector<VertexId> order(labels.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<VertexId>(i);
        std::stable_sort(order.begin(), order.end(),
                         [&](VertexId a, VertexId b) { return numeric[a] < numeric[b]; });
        std::vector<VertexId> remap(labels.size());
        std::vector<std::string> sorted;
        sorted.reserve(labels.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            remap[order[i]] = static_cast<VertexId>(i);
            sorted.push_back(labels[order[i]]);
        }
        for (auto& [u, v] : raw) {
            u = remap[u];
            v = remap[v];
        }
        labels = std::move(sorted);
    }

    const std::size_t n = labels.size();
    return Graph(n, std::move(raw), std::move(labels));
}

inline Graph read_edge_list(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

} // namespace cliquetop
