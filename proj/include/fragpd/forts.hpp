#pragma once

// Forts, fort entrances and the exhaustive power-domination oracles.

#include <bit>
#include <optional>

#include "fragpd/observe.hpp"

namespace fpd {

/// No vertex outside f has exactly one neighbour in f.
inline bool is_fort(const Graph& g, const VertexSet& f) {
    if (f.empty()) throw graph_error("a fort must be nonempty");
    for (Vertex v : f) g.check_vertex(v);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (f.contains(v)) continue;
        std::size_t inside = 0;
        for (Vertex y : g.neighbors(v))
            if (f.contains(y) && ++inside > 1) break;
        if (inside == 1) return false;
    }
    return true;
}

/// N[F] \ F.
inline VertexSet fort_entrance(const Graph& g, const VertexSet& f) {
    if (!is_fort(g, f)) throw graph_error("entrance requested for a set that is not a fort");
    return g.closed_neighborhood(f).set_difference(f);
}

namespace detail {

/// Visits every k-subset of {0..n-1} in lexicographic order; stops when fn returns true.
template <class Fn>
bool for_each_k_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return false;
    std::vector<Vertex> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = Vertex(i);
    while (true) {
        if (fn(std::span<const Vertex>(idx))) return true;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Smallest k <= max_k such that some k-subset power dominates, or nullopt.
/// Exhaustive; intended for small graphs.
inline std::optional<std::size_t> power_domination_number(const Graph& g, std::size_t max_k) {
    if (max_k < 1) throw graph_error("max_k must be at least 1");
    if (g.order() == 0) return 0;
    Propagator p(g);
    for (std::size_t k = 1; k <= std::min(max_k, g.order()); ++k) {
        bool found = detail::for_each_k_subset(g.order(), k, [&](std::span<const Vertex> s) {
            return p.run(s) == g.order();
        });
        if (found) return k;
    }
    return std::nullopt;
}

class too_large_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// All inclusion-minimal forts, by exhaustive enumeration in order of size.
inline std::vector<VertexSet> minimal_forts(const Graph& g, std::size_t max_n = 24) {
    const std::size_t n = g.order();
    if (n > max_n || n > 30)
        throw too_large_error("minimal_forts: graph has " + std::to_string(n) +
                              " vertices, exhaustive limit is " + std::to_string(std::min<std::size_t>(max_n, 30)));
    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex y : g.neighbors(v)) adj[v] |= 1u << y;
    auto fort_mask = [&](std::uint32_t f) {
        for (Vertex v = 0; v < n; ++v)
            if (!(f >> v & 1u) && std::popcount(adj[v] & f) == 1) return false;
        return true;
    };
    std::vector<std::uint32_t> found;
    for (std::size_t k = 1; k <= n; ++k) {
        detail::for_each_k_subset(n, k, [&](std::span<const Vertex> s) {
            std::uint32_t f = 0;
            for (Vertex v : s) f |= 1u << v;
            for (std::uint32_t m : found)
                if ((m & f) == m) return false;
            if (fort_mask(f)) found.push_back(f);
            return false;
        });
    }
    std::vector<VertexSet> out;
    out.reserve(found.size());
    for (std::uint32_t m : found) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v)
            if (m >> v & 1u) members.push_back(v);
        out.emplace_back(std::move(members));
    }
    return out;
}

}  // namespace fpd
