#pragma once

// Slow reference implementations used to cross-check the library. None of
// these share code paths with the engine beyond the Graph type.

#include <algorithm>
#include <random>
#include <vector>

#include "fragpd/graph.hpp"
#include "fragpd/polynomial.hpp"

namespace oracle {

using fpd::Graph;
using fpd::Integer;
using fpd::Rational;
using fpd::Vertex;

/// Domination then forcing, applying one randomly chosen available force at
/// a time until none remain.
inline std::vector<bool> observe(const Graph& g, const std::vector<Vertex>& active, std::mt19937_64& rng) {
    std::vector<bool> obs(g.order(), false);
    for (Vertex v : active) {
        obs[v] = true;
        for (Vertex u : g.neighbors(v)) obs[u] = true;
    }
    for (;;) {
        std::vector<std::pair<Vertex, Vertex>> forces;
        for (Vertex x = 0; x < g.order(); ++x) {
            if (!obs[x]) continue;
            int unobserved = 0;
            Vertex y = 0;
            for (Vertex u : g.neighbors(x))
                if (!obs[u]) {
                    ++unobserved;
                    y = u;
                }
            if (unobserved == 1) forces.emplace_back(x, y);
        }
        if (forces.empty()) return obs;
        obs[forces[rng() % forces.size()].second] = true;
    }
}

inline std::size_t observed_count(const Graph& g, const std::vector<Vertex>& active, std::uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    const auto obs = observe(g, active, rng);
    return static_cast<std::size_t>(std::count(obs.begin(), obs.end(), true));
}

/// E(G; M, q) at a rational q: every sensor copy fails independently, so a
/// support vertex v with multiplicity f survives with probability 1 - q^f.
inline Rational expected_value(const Graph& g, const std::vector<std::pair<Vertex, unsigned>>& placement,
                               const Rational& q) {
    const std::size_t s = placement.size();
    Rational total = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
        Rational weight = 1;
        std::vector<Vertex> alive;
        for (std::size_t i = 0; i < s; ++i) {
            Rational fail = 1;
            for (unsigned c = 0; c < placement[i].second; ++c) fail *= q;
            if (mask >> i & 1u) {
                weight *= 1 - fail;
                alive.push_back(placement[i].first);
            } else {
                weight *= fail;
            }
        }
        if (weight != 0) total += weight * Rational(observed_count(g, alive));
    }
    return total;
}

inline std::vector<std::pair<Vertex, unsigned>> as_set(const std::vector<Vertex>& s) {
    std::vector<std::pair<Vertex, unsigned>> out;
    for (Vertex v : s) out.emplace_back(v, 1u);
    return out;
}

/// Recovers a_0..a_s from values of p(q) = sum a_k q^{s-k}(1-q)^k: with
/// q = t/(1+t), (1+t)^s p = sum a_k t^{s-k}, interpolated at t = 0..s.
inline std::vector<Rational> recover_basis(const fpd::Polynomial& p, std::size_t s) {
    const std::size_t n = s + 1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        const Rational t(static_cast<long long>(r));
        Rational scale = 1;
        for (std::size_t j = 0; j < s; ++j) scale *= 1 + t;
        Rational tp = 1;
        for (std::size_t c = 0; c < n; ++c) {
            m[r][c] = tp;  // coefficient of t^c, which is a_{s-c}
            tp *= t;
        }
        m[r][n] = scale * p.evaluate(t / (1 + t));
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (m[piv][c] == 0) ++piv;
        std::swap(m[piv], m[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<Rational> a(n);
    for (std::size_t c = 0; c < n; ++c) a[s - c] = m[c][n] / m[c][c];
    return a;
}

/// G(n, p) with p given as a percentage.
inline Graph random_graph(std::size_t n, unsigned percent, std::mt19937_64& rng) {
    std::vector<fpd::Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng() % 100 < percent) edges.emplace_back(u, v);
    return fpd::make_graph(n, edges);
}

/// Random tree with extra edges; sparse graphs are where forcing matters.
inline Graph random_sparse_graph(std::size_t n, std::size_t extra, std::mt19937_64& rng) {
    std::vector<fpd::Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
    for (std::size_t k = 0; k < extra && n > 1; ++k) {
        const auto u = static_cast<Vertex>(rng() % n);
        const auto v = static_cast<Vertex>(rng() % n);
        if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return fpd::make_graph(n, edges);
}

inline std::vector<Vertex> random_subset(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(k, n));
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace oracle
