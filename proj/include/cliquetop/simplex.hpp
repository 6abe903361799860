#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "cliquetop/error.hpp"

namespace cliquetop {

using VertexId = std::uint32_t;

/// A non-empty set of vertices, stored strictly increasing.
class Simplex {
public:
    Simplex() = default;

    Simplex(std::initializer_list<VertexId> vs) : Simplex(std::vector<VertexId>(vs)) {}

    /// Sorts the input; duplicates and empty input are rejected.
    explicit Simplex(std::vector<VertexId> vs) : vertices_(std::move(vs)) {
        if (vertices_.empty()) {
            throw ArgumentError("a simplex needs at least one vertex");
        }
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
            throw ArgumentError("a simplex cannot repeat a vertex");
        }
    }

    /// Skips validation; `vs` must already be strictly increasing and non-empty.
    static Simplex from_sorted(std::vector<VertexId> vs) {
        Simplex s;
        s.vertices_ = std::move(vs);
        return s;
    }

    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    /// True when every vertex of `other` is a vertex of this simplex.
    bool contains(const Simplex& other) const {
        return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                             other.vertices_.end());
    }

    bool contains(VertexId v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    /// The codimension-one face obtained by dropping the vertex at position `i`.
    Simplex without(std::size_t i) const {
        std::vector<VertexId> out;
        out.reserve(vertices_.size() - 1);
        for (std::size_t j = 0; j < vertices_.size(); ++j) {
            if (j != i) out.push_back(vertices_[j]);
        }
        return from_sorted(std::move(out));
    }

    friend Simplex set_union(const Simplex& a, const Simplex& b) {
        std::vector<VertexId> out;
        out.reserve(a.size() + b.size());
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return from_sorted(std::move(out));
    }

    friend bool operator==(const Simplex&, const Simplex&) = default;

    // Shorter simplices first, then lexicographic; within one dimension this is
    // plain lexicographic order.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
        if (a.size() != b.size()) return a.size() <=> b.size();
        return a.vertices_ <=> b.vertices_;
    }

private:
    std::vector<VertexId> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept {
        // FNV-1a over the vertex ids.
        std::uint64_t h = 1469598103934665603ULL;
        for (VertexId v : s) {
            h ^= v;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

/// All non-empty proper subsets of `s`, ordered by dimension then lexicographically.
inline std::vector<Simplex> faces(const Simplex& s) {
    std::vector<Simplex> out;
    const std::size_t n = s.size();
    if (n <= 1) return out;
    if (n >= 31) throw ArgumentError("simplex too large to enumerate faces");
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<VertexId> vs;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) vs.push_back(s[i]);
        }
        out.push_back(Simplex::from_sorted(std::move(vs)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Calls `fn(face)` for every subset of `vertices` with exactly `size` elements,
/// in lexicographic order.
template <class Fn>
void for_each_combination(std::span<const VertexId> vertices, std::size_t size, Fn&& fn) {
    const std::size_t n = vertices.size();
    if (size == 0 || size > n) return;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    std::vector<VertexId> buf(size);
    while (true) {
        for (std::size_t i = 0; i < size; ++i) buf[i] = vertices[idx[i]];
        fn(std::span<const VertexId>(buf));
        std::size_t i = size;
        while (i > 0 && idx[i - 1] == n - size + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace cliquetop

template <>
struct std::hash<cliquetop::Simplex> : cliquetop::SimplexHash {};
