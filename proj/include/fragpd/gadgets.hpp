#pragma once

// Fork and spoon gadgets, the affix operation, closed forms for the
// probability that a gadget's path head is observed, and a builder that
// attaches gadgets to a host graph so chosen coefficients of the expected
// value polynomial take prescribed values.

#include <map>

#include "fragpd/characterize.hpp"
#include "fragpd/expoly.hpp"
#include "fragpd/forts.hpp"

namespace fpd {

enum class GadgetKind { fork, spoon };

inline const char* to_string(GadgetKind k) { return k == GadgetKind::fork ? "fork" : "spoon"; }

struct GadgetSpec {
    GadgetKind kind = GadgetKind::fork;
    /// Number of affix vertices, >= 2.
    std::size_t a = 2;
    /// Vertices on the path appended at the path head.
    std::size_t length = 0;
};

struct GadgetGraph {
    Graph graph;
    std::vector<Vertex> affix;
    Vertex connection = 0;
    Vertex path_head = 0;
    VertexSet path;
};

namespace detail {

inline void check_arity(std::size_t a) {
    if (a < 2) throw std::invalid_argument("gadgets need at least 2 affix vertices, got " + std::to_string(a));
}

inline GadgetGraph finish_gadget(GraphBuilder& b, std::vector<Vertex> affix, Vertex connection, Vertex head,
                                 std::size_t length) {
    std::vector<Vertex> path;
    Vertex prev = head;
    for (std::size_t i = 0; i < length; ++i) {
        Vertex x = b.add_vertex();
        b.add_edge(prev, x);
        path.push_back(x);
        prev = x;
    }
    for (Vertex w : affix) b.set_label(w, "affix");
    b.set_label(connection, "connection");
    b.set_label(head, "path_head");
    return {b.build(), std::move(affix), connection, head, VertexSet(std::move(path))};
}

}  // namespace detail

/// Star K_{1,a+1} with a subdivided edges; the subdivided ends are the affix
/// vertices, the centre is the connection, the remaining leaf is the path head.
inline GadgetGraph build_fork(std::size_t length, std::size_t a) {
    detail::check_arity(a);
    GraphBuilder b;
    const Vertex center = b.add_vertex();
    std::vector<Vertex> affix;
    for (std::size_t i = 0; i < a; ++i) {
        const Vertex w = b.add_vertex();
        const Vertex mid = b.add_vertex();
        b.add_edge(w, mid);
        b.add_edge(mid, center);
        affix.push_back(w);
    }
    const Vertex head = b.add_vertex();
    b.add_edge(center, head);
    return detail::finish_gadget(b, std::move(affix), center, head, length);
}

/// a = 2: C_4 plus a leaf on one cycle vertex (the connection); the affix
/// vertices are the connection's cycle neighbours.
/// a >= 3: subdivided incidence graph between A and its (a-1)-subsets, a hub x
/// joined to every subset vertex, and the path head v joined to x.
inline GadgetGraph build_spoon(std::size_t length, std::size_t a) {
    detail::check_arity(a);
    GraphBuilder b;
    if (a == 2) {
        const Vertex c = b.add_vertex();
        const Vertex w1 = b.add_vertex();
        const Vertex w2 = b.add_vertex();
        const Vertex opposite = b.add_vertex();
        const Vertex head = b.add_vertex();
        b.add_edge(c, w1);
        b.add_edge(c, w2);
        b.add_edge(w1, opposite);
        b.add_edge(w2, opposite);
        b.add_edge(c, head);
        return detail::finish_gadget(b, {w1, w2}, c, head, length);
    }
    std::vector<Vertex> affix;
    for (std::size_t i = 0; i < a; ++i) affix.push_back(b.add_vertex());
    const Vertex hub = b.add_vertex();
    // subset j is A minus its j-th element
    for (std::size_t j = 0; j < a; ++j) {
        const Vertex subset = b.add_vertex();
        b.add_edge(subset, hub);
        for (std::size_t i = 0; i < a; ++i) {
            if (i == j) continue;
            const Vertex mid = b.add_vertex();
            b.add_edge(affix[i], mid);
            b.add_edge(mid, subset);
        }
    }
    const Vertex head = b.add_vertex();
    b.add_edge(hub, head);
    return detail::finish_gadget(b, std::move(affix), hub, head, length);
}

inline GadgetGraph build_gadget(const GadgetSpec& spec) {
    return spec.kind == GadgetKind::fork ? build_fork(spec.length, spec.a) : build_spoon(spec.length, spec.a);
}

/// Expected vertex count of a gadget, straight from the constructions.
inline std::size_t gadget_order(const GadgetSpec& spec) {
    if (spec.kind == GadgetKind::fork) return 2 * spec.a + 2 + spec.length;
    if (spec.a == 2) return 5 + spec.length;
    return spec.a * spec.a + spec.a + 2 + spec.length;
}

struct AffixResult {
    Graph graph;
    /// Gadget vertex -> result vertex. Host vertices keep their identifiers.
    std::vector<Vertex> gadget_to_result;
    Vertex connection = 0;
    Vertex path_head = 0;
    VertexSet path;
};

/// Identifies targets[i] with the i-th affix vertex of the gadget.
inline AffixResult affix(const Graph& g, const std::vector<Vertex>& targets, const GadgetSpec& spec) {
    if (targets.size() != spec.a)
        throw std::invalid_argument("affix needs " + std::to_string(spec.a) + " target vertices, got " +
                                    std::to_string(targets.size()));
    const GadgetGraph gadget = build_gadget(spec);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t i = 0; i < targets.size(); ++i) pairs.emplace_back(targets[i], gadget.affix[i]);
    auto glued = identify_vertices_mapped(g, gadget.graph, pairs);
    AffixResult r;
    r.connection = glued.h_to_result[gadget.connection];
    r.path_head = glued.h_to_result[gadget.path_head];
    std::vector<Vertex> path;
    for (Vertex v : gadget.path) path.push_back(glued.h_to_result[v]);
    r.path = VertexSet(std::move(path));
    r.graph = std::move(glued.graph);
    r.gadget_to_result = std::move(glued.h_to_result);
    return r;
}

/// Closed form for Pr(path head observed) given the multiplicity on each
/// affix vertex, assuming every affix vertex also has two leaves outside the
/// placement.
inline Polynomial path_head_probability(const GadgetSpec& spec, const std::vector<unsigned>& f) {
    if (f.size() != spec.a)
        throw std::invalid_argument("expected " + std::to_string(spec.a) + " multiplicities, got " +
                                    std::to_string(f.size()));
    detail::check_arity(spec.a);
    Polynomial all_succeed = Polynomial::constant(1);
    for (unsigned x : f) all_succeed *= Polynomial::one_minus_q_pow(x);
    if (spec.kind == GadgetKind::fork) return all_succeed;
    if (spec.a == 2) return Polynomial::one_minus_q_pow(f[0] + f[1]);
    // exactly one affix vertex loses all its sensors, or none does
    Polynomial out = all_succeed;
    for (std::size_t w = 0; w < f.size(); ++w) {
        Polynomial term = Polynomial::monomial(f[w]);
        for (std::size_t u = 0; u < f.size(); ++u)
            if (u != w) term *= Polynomial::one_minus_q_pow(f[u]);
        out += term;
    }
    return out;
}

/// Leaf neighbours of v (degree-1 vertices) that carry no sensor.
inline std::size_t free_leaf_count(const Graph& g, Vertex v, const VertexSet& support) {
    std::size_t n = 0;
    for (Vertex y : g.neighbors(v))
        if (g.degree(y) == 1 && !support.contains(y)) ++n;
    return n;
}

struct LeafPadding {
    Graph graph;
    std::map<Vertex, std::size_t> added;
};

/// Adds just enough leaves so each vertex in `targets` has two sensor-free leaves.
inline LeafPadding pad_leaves(const Graph& g, const VertexSet& targets, const VertexSet& support) {
    GraphBuilder b(g);
    LeafPadding r;
    for (Vertex v : targets) {
        g.check_vertex(v);
        const std::size_t have = free_leaf_count(g, v, support);
        for (std::size_t i = have; i < 2; ++i) {
            b.add_edge(v, b.add_vertex("leaf"));
            ++r.added[v];
        }
    }
    r.graph = b.build();
    return r;
}

struct Lemma25Check {
    bool holds = false;
    Polynomial closed_form;
    Polynomial head;
    /// Engine probabilities for each appended path vertex.
    std::vector<Polynomial> path;
};

/// Affixes the gadget at `targets` and compares the engine's path-head (and
/// path) probabilities with path_head_probability.
inline Lemma25Check verify_lemma25(const Graph& g, const std::vector<Vertex>& targets, const GadgetSpec& spec,
                                   const Placement& m, bool add_leaves = false,
                                   std::size_t cap = default_enumeration_cap) {
    const VertexSet support = m.support();
    const VertexSet target_set(targets);
    if (!target_set.is_subset_of(support)) throw std::invalid_argument("affix targets must carry sensors");
    Graph host = g;
    if (add_leaves) {
        host = pad_leaves(g, target_set, support).graph;
    } else {
        for (Vertex v : targets)
            if (free_leaf_count(g, v, support) < 2)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " needs two leaf neighbours outside the placement");
    }
    const AffixResult glued = affix(host, targets, spec);
    std::vector<unsigned> f;
    for (Vertex v : targets) f.push_back(m.multiplicity(v));
    Lemma25Check r;
    r.closed_form = path_head_probability(spec, f);
    const auto probs = per_vertex_probabilities(glued.graph, m, cap);
    r.head = probs[glued.path_head];
    r.holds = r.head == r.closed_form;
    for (Vertex v : glued.path) {
        r.path.push_back(probs[v]);
        r.holds = r.holds && probs[v] == r.closed_form;
    }
    return r;
}

class build_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GadgetAttachment {
    /// The power i in R_2 this pair of gadgets controls.
    std::size_t power = 0;
    VertexSet affix_set;
    std::size_t fork_length = 0;
    std::size_t spoon_length = 0;
    /// Required leading coefficient t_i of the pair's path contribution.
    Integer demand;
    Vertex fork_head = 0;
    Vertex spoon_head = 0;
};

struct GadgetBuildReport {
    Graph result;
    /// Host vertex -> result vertex.
    std::vector<Vertex> embedding;
    std::vector<GadgetAttachment> parameters;
    std::map<Vertex, std::size_t> added_leaves;
    Polynomial polynomial;
    bool postcondition_holds = false;
    bool induced = false;
    SignAudit audit;
};

struct BuildOptions {
    std::size_t cap = default_enumeration_cap;
    std::size_t max_path_length = 1'000'000;
};

/// Smallest |A| first, then lexicographically smallest sorted ids, among
/// subsets of the support with |A| >= 2 and multiplicity sum i.
inline std::optional<VertexSet> choose_affix_set(const Placement& m, std::size_t i) {
    const auto& e = m.entries();
    const std::size_t s = e.size();
    for (std::size_t k = 2; k <= s; ++k) {
        std::optional<VertexSet> found;
        detail::for_each_k_subset(s, k, [&](std::span<const Vertex> idx) {
            std::size_t sum = 0;
            for (Vertex j : idx) sum += e[j].second;
            if (sum != i) return false;
            std::vector<Vertex> members;
            for (Vertex j : idx) members.push_back(e[j].first);
            found = VertexSet(std::move(members));
            return true;
        });
        if (found) return found;
    }
    return std::nullopt;
}

/// Nonnegative (fork, spoon) lengths with fork*lead_fork + spoon*lead_spoon = t
/// and fork + spoon minimal. The two leads have opposite signs, |lead_fork| = 1.
inline std::pair<Integer, Integer> split_demand(const Integer& t, const Integer& lead_fork, const Integer& lead_spoon) {
    if (abs(lead_fork) != 1 || lead_spoon == 0 || (lead_fork > 0) == (lead_spoon > 0))
        throw consistency_error("unexpected gadget leading coefficients");
    const Integer u = t * lead_fork;
    const Integer step = abs(lead_spoon);
    if (u >= 0) return {u, Integer(0)};
    const Integer spoon = (-u + step - 1) / step;
    return {u + spoon * step, spoon};
}

/// Attaches a fork and a spoon for every i in R_2 so that the resulting
/// expected polynomial has coefficient targets[i] at q^i. The host stays an
/// induced subgraph (host ids are unchanged).
inline GadgetBuildReport target_coefficients(const Graph& g, const Placement& m,
                                             const std::map<std::size_t, Integer>& targets,
                                             const BuildOptions& opt = {}) {
    m.check_against(g);
    if (m.support_size() < 2) throw std::invalid_argument("coefficient targeting needs at least two sensor vertices");
    SubsetTable::check_cap(m.support_size(), opt.cap);
    const SensorClasses rs = sensor_class_sets(m);
    {
        std::string missing, extra;
        for (std::size_t i : rs.r2)
            if (!targets.count(i)) missing += " " + std::to_string(i);
        for (const auto& [i, _] : targets)
            if (!rs.r2.count(i)) extra += " " + std::to_string(i);
        if (!missing.empty() || !extra.empty())
            throw std::invalid_argument("target powers must equal R_2; missing:" + (missing.empty() ? " none" : missing) +
                                        "; not in R_2:" + (extra.empty() ? " none" : extra));
    }

    GadgetBuildReport rep;
    const VertexSet support = m.support();
    LeafPadding padded = pad_leaves(g, support, support);
    rep.added_leaves = padded.added;
    Graph work = std::move(padded.graph);

    // attach zero-length gadgets, largest power first, fork before spoon
    for (auto it = rs.r2.rbegin(); it != rs.r2.rend(); ++it) {
        GadgetAttachment att;
        att.power = *it;
        att.affix_set = *choose_affix_set(m, *it);
        const std::vector<Vertex> targets_i = att.affix_set.members();
        const std::size_t a = targets_i.size();
        AffixResult fork = affix(work, targets_i, {GadgetKind::fork, a, 0});
        att.fork_head = fork.path_head;
        AffixResult spoon = affix(fork.graph, targets_i, {GadgetKind::spoon, a, 0});
        att.spoon_head = spoon.path_head;
        work = std::move(spoon.graph);
        rep.parameters.push_back(std::move(att));
    }

    const auto probs = per_vertex_probabilities(work, m, opt.cap);
    Polynomial base;
    for (const auto& p : probs) base += p;

    // triangular solve, descending powers
    Polynomial current = base;
    for (auto& att : rep.parameters) {
        const Polynomial& head_fork = probs[att.fork_head];
        const Polynomial& head_spoon = probs[att.spoon_head];
        std::vector<unsigned> f;
        for (Vertex v : att.affix_set) f.push_back(m.multiplicity(v));
        const std::size_t a = att.affix_set.size();
        if (head_fork != path_head_probability({GadgetKind::fork, a, 0}, f) ||
            head_spoon != path_head_probability({GadgetKind::spoon, a, 0}, f))
            throw consistency_error("path-head probability differs from its closed form at power " +
                                    std::to_string(att.power));
        const std::size_t i = att.power;
        att.demand = targets.at(i) - current.coeff(i);
        auto [fork_len, spoon_len] = split_demand(att.demand, head_fork.coeff(i), head_spoon.coeff(i));
        if (fork_len > opt.max_path_length || spoon_len > opt.max_path_length)
            throw build_error("path length for power " + std::to_string(i) + " exceeds the limit of " +
                              std::to_string(opt.max_path_length));
        att.fork_length = fork_len.convert_to<std::size_t>();
        att.spoon_length = spoon_len.convert_to<std::size_t>();
        current.add_scaled(head_fork, fork_len);
        current.add_scaled(head_spoon, spoon_len);
    }

    GraphBuilder b(work);
    auto extend = [&b](Vertex head, std::size_t len) {
        Vertex prev = head;
        for (std::size_t k = 0; k < len; ++k) {
            const Vertex x = b.add_vertex();
            b.add_edge(prev, x);
            prev = x;
        }
    };
    for (const auto& att : rep.parameters) {
        extend(att.fork_head, att.fork_length);
        extend(att.spoon_head, att.spoon_length);
    }
    rep.result = b.build();
    rep.embedding.resize(g.order());
    for (Vertex v = 0; v < g.order(); ++v) rep.embedding[v] = v;

    const SubsetTable table(rep.result, support, opt.cap);
    rep.polynomial = expected_polynomial_multiset(table, m).power;
    rep.postcondition_holds = rep.polynomial == current;
    for (const auto& [i, c] : targets) rep.postcondition_holds = rep.postcondition_holds && rep.polynomial.coeff(i) == c;
    rep.induced = is_induced_embedding(g, rep.result, rep.embedding);
    rep.audit = coefficient_sign_audit(rep.polynomial, m, table.size(table.subset_count() - 1));
    return rep;
}

}  // namespace fpd
