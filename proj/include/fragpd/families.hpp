#pragma once

// Named graphs and parametric families: the 7-vertex triangle example, its
// linear-polynomial extension, H(t,w,d), and the grid-with-clique family
// G_s(l) wired by a round-robin 1-factorization of K_s.

#include <random>

#include "fragpd/compare.hpp"
#include "fragpd/forts.hpp"
#include "fragpd/gadgets.hpp"

namespace fpd {

struct PlacedGraph {
    Graph graph;
    VertexSet placement;
};

/// Triangle u, v, w with two pendant leaves on each of v and w; S = {u, v, w}.
inline PlacedGraph fig3_base() {
    GraphBuilder b;
    const Vertex u = b.add_vertex("u");
    const Vertex v = b.add_vertex("v");
    const Vertex w = b.add_vertex("w");
    b.add_edge(u, v);
    b.add_edge(v, w);
    b.add_edge(u, w);
    for (Vertex x : {v, v, w, w}) b.add_edge(x, b.add_vertex());
    return {b.build(), {u, v, w}};
}

/// fig3_base with fork(5) and spoon(0) on {u,v,w}, fork(6) and spoon(0) on
/// {v,w}, and two leaves on u. Its expected polynomial is 43(1 - q).
inline PlacedGraph fig4_counterexample() {
    PlacedGraph base = fig3_base();
    const Vertex u = 0, v = 1, w = 2;
    Graph g = affix(base.graph, {u, v, w}, {GadgetKind::fork, 3, 5}).graph;
    g = affix(g, {u, v, w}, {GadgetKind::spoon, 3, 0}).graph;
    g = affix(g, {v, w}, {GadgetKind::fork, 2, 6}).graph;
    g = affix(g, {v, w}, {GadgetKind::spoon, 2, 0}).graph;
    g = add_leaf(add_leaf(g, u), u);
    return {std::move(g), base.placement};
}

/// H'(t,w): 2P_3 with fork(t,2) and spoon(w,2) affixed at the two path centres.
/// The centres (affix vertices) are 1 and 4.
inline Graph h_prime(std::size_t t, std::size_t w) {
    GraphBuilder b(6);
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(3, 4);
    b.add_edge(4, 5);
    b.set_label(1, "a0");
    b.set_label(4, "a1");
    Graph g = affix(b.build(), {1, 4}, {GadgetKind::fork, 2, t}).graph;
    return affix(g, {1, 4}, {GadgetKind::spoon, 2, w}).graph;
}

/// H'(t,w) + K_{d+1} + (s-3) isolated vertices. The placement is the two
/// affix vertices, the first clique vertex, and every isolated vertex.
inline PlacedGraph h_graph(std::size_t t, std::size_t w, std::size_t d, std::size_t s) {
    if (s < 3) throw std::invalid_argument("h_graph needs s >= 3");
    Graph g = h_prime(t, w);
    const auto clique_start = static_cast<Vertex>(g.order());
    g = disjoint_union(g, complete_graph(d + 1), "");
    g = with_label(g, clique_start, "clique");
    const auto isolated_start = static_cast<Vertex>(g.order());
    g = disjoint_union(g, empty_graph(s - 3), "");
    std::vector<Vertex> placement{1, 4, clique_start};
    for (std::size_t i = 0; i < s - 3; ++i) placement.push_back(isolated_start + static_cast<Vertex>(i));
    return {std::move(g), VertexSet(std::move(placement))};
}

/// (t - w - 5) q^2 - (s + 2t + d + 6) q + (s + t + w + d + 11)
inline Polynomial h_graph_polynomial(long long t, long long w, long long d, long long s) {
    return Polynomial({s + t + w + d + 11, -(s + 2 * t + d + 6), t - w - 5});
}

struct HParameters {
    std::size_t t = 0;
    std::size_t w = 0;
    std::size_t d = 0;
};

/// Parameters making E(H(t,w,d); S') = a q^2 - b q + (b - a); requires
/// b >= max(s + 2a + 16, s + 6).
inline HParameters h_parameters_for(long long s, long long a, long long b) {
    if (b < std::max(s + 2 * a + 16, s + 6))
        throw std::invalid_argument("linear coefficient magnitude b is below max(s + 2a + 16, s + 6)");
    if (a <= -5) return {0, static_cast<std::size_t>(-a - 5), static_cast<std::size_t>(b - (s + 6))};
    return {static_cast<std::size_t>(a + 5), 0, static_cast<std::size_t>(b - (s + 2 * a + 16))};
}

/// Circle method: vertex s-1 is fixed, the others rotate. Round r pairs
/// (r, s-1) and ((r+k) mod (s-1), (r-k) mod (s-1)) for 1 <= k < s/2.
inline std::vector<std::vector<Edge>> round_robin_factorization(std::size_t s) {
    if (s < 2 || s % 2) throw std::invalid_argument("1-factorization of K_s needs even s >= 2");
    const std::size_t m = s - 1;
    std::vector<std::vector<Edge>> rounds(m);
    for (std::size_t r = 0; r < m; ++r) {
        auto add = [&](std::size_t x, std::size_t y) {
            rounds[r].emplace_back(static_cast<Vertex>(std::min(x, y)), static_cast<Vertex>(std::max(x, y)));
        };
        add(r, m);
        for (std::size_t k = 1; k < s / 2; ++k) add((r + k) % m, (r + m - k) % m);
        std::sort(rounds[r].begin(), rounds[r].end());
    }
    return rounds;
}

/// G_s(l) on rows 1..s and columns 1..eta, eta = l + 2s (1-based, as in the
/// named sets R_i, C_j, L_i, F_i).
class GFamily {
public:
    GFamily(std::size_t s, std::size_t l) : s_(s), l_(l), eta_(l + 2 * s) {
        if (s < 4 || s % 2) throw std::invalid_argument("G_s(l) needs even s >= 4");
        GraphBuilder b(s * eta_);
        for (std::size_t i = 1; i <= s; ++i)
            for (std::size_t j = 1; j < eta_; ++j) b.add_edge(vertex(i, j), vertex(i, j + 1));
        for (std::size_t i = 1; i <= s; ++i)
            for (std::size_t i2 = i + 1; i2 <= s; ++i2) b.add_edge(vertex(i, 2), vertex(i2, 2));
        matchings_ = round_robin_factorization(s);
        for (std::size_t j = 1; j <= s - 1; ++j)
            for (auto [x, y] : matchings_[j - 1]) b.add_edge(vertex(x + 1, 2 * j + 2), vertex(y + 1, 2 * j + 2));
        graph_ = b.build();
    }

    [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
    [[nodiscard]] std::size_t s() const noexcept { return s_; }
    [[nodiscard]] std::size_t ell() const noexcept { return l_; }
    [[nodiscard]] std::size_t eta() const noexcept { return eta_; }
    [[nodiscard]] const std::vector<std::vector<Edge>>& matchings() const noexcept { return matchings_; }

    [[nodiscard]] Vertex vertex(std::size_t i, std::size_t j) const {
        if (i < 1 || i > s_ || j < 1 || j > eta_) throw std::out_of_range("grid coordinate out of range");
        return static_cast<Vertex>((i - 1) * eta_ + (j - 1));
    }
    /// (row, column) of a vertex.
    [[nodiscard]] std::pair<std::size_t, std::size_t> coords(Vertex v) const {
        graph_.check_vertex(v);
        return {v / eta_ + 1, v % eta_ + 1};
    }

    [[nodiscard]] VertexSet row(std::size_t i) const {
        std::vector<Vertex> out;
        for (std::size_t j = 1; j <= eta_; ++j) out.push_back(vertex(i, j));
        return VertexSet(std::move(out));
    }
    [[nodiscard]] VertexSet column(std::size_t j) const {
        std::vector<Vertex> out;
        for (std::size_t i = 1; i <= s_; ++i) out.push_back(vertex(i, j));
        return VertexSet(std::move(out));
    }
    /// Columns 2s+1..eta of row i.
    [[nodiscard]] VertexSet pendant(std::size_t i) const {
        std::vector<Vertex> out;
        for (std::size_t j = 2 * s_ + 1; j <= eta_; ++j) out.push_back(vertex(i, j));
        return VertexSet(std::move(out));
    }
    /// Odd columns 1..2s-1 of row i plus its pendant path.
    [[nodiscard]] VertexSet fort(std::size_t i) const {
        std::vector<Vertex> out;
        for (std::size_t j = 1; j <= s_; ++j) out.push_back(vertex(i, 2 * j - 1));
        return VertexSet(std::move(out)).set_union(pendant(i));
    }
    [[nodiscard]] VertexSet clique() const { return column(2); }
    [[nodiscard]] VertexSet special() const { return column(2 * s_); }

private:
    std::size_t s_;
    std::size_t l_;
    std::size_t eta_;
    std::vector<std::vector<Edge>> matchings_;
    Graph graph_;
};

inline GFamily g_family(std::size_t s, std::size_t l) { return GFamily(s, l); }

struct Prop43Sample {
    VertexSet placement;
    Comparison comparison;
    /// For each k in 1..s-1: some k-subset observes fewer than k pendant paths.
    bool pendant_bound = false;
};

struct Prop43Report {
    bool forts_ok = true;
    bool forts_disjoint = true;
    /// Forts pairwise disjoint with entrances inside their rows, so any power
    /// dominating set needs a vertex in every row.
    std::size_t fort_lower_bound = 0;
    bool special_dominates = false;
    bool clique_dominates = false;
    bool every_column_dominates = false;
    std::optional<std::size_t> exhaustive_gamma;
    bool comparison_applicable = false;
    std::vector<Prop43Sample> samples;

    [[nodiscard]] bool samples_ok() const {
        for (const auto& x : samples)
            if (x.comparison.verdict != Dominance::dominates_strictly || !x.comparison.grid_consistent ||
                !x.pendant_bound)
                return false;
        return true;
    }
};

struct Prop43Options {
    /// Run the exhaustive power-domination search when the order is at most this.
    std::size_t exhaustive_max_order = 64;
};

inline Prop43Report verify_prop43(std::size_t s, std::size_t l, std::size_t sample_count, std::uint64_t seed,
                                  const Prop43Options& opt = {}) {
    const GFamily fam(s, l);
    const Graph& g = fam.graph();
    Prop43Report rep;

    std::vector<bool> taken(g.order(), false);
    for (std::size_t i = 1; i <= s; ++i) {
        const VertexSet f = fam.fort(i);
        if (!is_fort(g, f)) {
            rep.forts_ok = false;
            continue;
        }
        if (f.set_union(fort_entrance(g, f)) != fam.row(i)) rep.forts_ok = false;
        for (Vertex v : f) {
            if (taken[v]) rep.forts_disjoint = false;
            taken[v] = true;
        }
    }
    rep.fort_lower_bound = rep.forts_ok && rep.forts_disjoint ? s : 0;
    rep.special_dominates = is_power_dominating(g, fam.special());
    rep.clique_dominates = is_power_dominating(g, fam.clique());
    rep.every_column_dominates = true;
    for (std::size_t j = 1; j <= fam.eta(); ++j)
        rep.every_column_dominates = rep.every_column_dominates && is_power_dominating(g, fam.column(j));
    if (g.order() <= opt.exhaustive_max_order) rep.exhaustive_gamma = power_domination_number(g, s);

    const std::size_t threshold = s * s * (std::size_t{1} << (s + 1));
    rep.comparison_applicable = l > threshold;
    if (!rep.comparison_applicable) return rep;

    const VertexSet special = fam.special();
    const VertexSet clique = fam.clique();
    std::vector<VertexSet> pendants;
    for (std::size_t i = 1; i <= s; ++i) pendants.push_back(fam.pendant(i));
    Propagator prop(g);

    for (std::size_t n = 0; n < sample_count; ++n) {
        std::seed_seq seq{seed, static_cast<std::uint64_t>(n)};
        std::mt19937_64 rng(seq);
        std::vector<Vertex> members{clique[rng() % clique.size()]};
        while (members.size() < s) {
            const auto v = static_cast<Vertex>(rng() % g.order());
            if (std::find(members.begin(), members.end(), v) == members.end()) members.push_back(v);
        }
        Prop43Sample sample;
        sample.placement = VertexSet(members);
        sample.comparison = compare_placements(g, sample.placement, special);

        sample.pendant_bound = true;
        for (std::size_t k = 1; k < s; ++k) {
            const bool some = detail::for_each_k_subset(s, k, [&](std::span<const Vertex> idx) {
                std::vector<Vertex> act;
                for (Vertex j : idx) act.push_back(sample.placement[j]);
                prop.run(act);
                std::size_t covered = 0;
                for (const auto& p : pendants) {
                    bool all = true;
                    for (Vertex v : p) all = all && prop.observed(v);
                    if (all) ++covered;
                }
                return covered < k;
            });
            sample.pendant_bound = sample.pendant_bound && some;
        }
        rep.samples.push_back(std::move(sample));
    }
    return rep;
}

}  // namespace fpd
