#pragma once

// Finite simple undirected graphs with contiguous vertex identifiers and
// optional text labels, plus the composition operations used to build the
// gadget and family graphs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpd {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class graph_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sorted, duplicate-free set of vertex identifiers.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members) : members_(members) { normalize(); }
    explicit VertexSet(std::vector<Vertex> members) : members_(std::move(members)) { normalize(); }

    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] bool contains(Vertex v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }
    [[nodiscard]] const std::vector<Vertex>& members() const noexcept { return members_; }
    [[nodiscard]] auto begin() const noexcept { return members_.begin(); }
    [[nodiscard]] auto end() const noexcept { return members_.end(); }
    [[nodiscard]] Vertex operator[](std::size_t i) const { return members_[i]; }

    void insert(Vertex v) {
        auto it = std::lower_bound(members_.begin(), members_.end(), v);
        if (it == members_.end() || *it != v) members_.insert(it, v);
    }

    [[nodiscard]] bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.begin(), other.end(), begin(), end());
    }
    [[nodiscard]] bool intersects(const VertexSet& other) const {
        auto a = begin();
        auto b = other.begin();
        while (a != end() && b != other.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }
    [[nodiscard]] VertexSet set_union(const VertexSet& other) const {
        std::vector<Vertex> out;
        std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }
    [[nodiscard]] VertexSet set_difference(const VertexSet& other) const {
        std::vector<Vertex> out;
        std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }
    [[nodiscard]] VertexSet set_intersection(const VertexSet& other) const {
        std::vector<Vertex> out;
        std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        return VertexSet(std::move(out));
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    void normalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    std::vector<Vertex> members_;
};

class GraphBuilder;

/// Immutable simple graph on vertices 0..order()-1.
class Graph {
public:
    Graph() = default;

    [[nodiscard]] std::size_t order() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return edge_count_; }

    [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adjacency_[v];
    }
    [[nodiscard]] std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const {
        const auto& nu = neighbors(u);
        return std::binary_search(nu.begin(), nu.end(), v);
    }
    [[nodiscard]] bool contains(Vertex v) const noexcept { return v < order(); }

    [[nodiscard]] std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : adjacency_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    [[nodiscard]] const std::map<Vertex, std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] std::optional<std::string> label(Vertex v) const {
        auto it = labels_.find(v);
        if (it == labels_.end()) return std::nullopt;
        return it->second;
    }
    /// Lowest vertex carrying the label, if any.
    [[nodiscard]] std::optional<Vertex> find_label(std::string_view text) const {
        for (const auto& [v, l] : labels_)
            if (l == text) return v;
        return std::nullopt;
    }

    /// Closed neighbourhood N[S].
    [[nodiscard]] VertexSet closed_neighborhood(const VertexSet& s) const {
        std::vector<Vertex> out;
        for (Vertex v : s) {
            check_vertex(v);
            out.push_back(v);
            out.insert(out.end(), adjacency_[v].begin(), adjacency_[v].end());
        }
        return VertexSet(std::move(out));
    }

    void check_vertex(Vertex v) const {
        if (v >= order())
            throw graph_error("vertex " + std::to_string(v) + " out of range for graph of order " +
                              std::to_string(order()));
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    std::vector<std::vector<Vertex>> adjacency_;
    std::map<Vertex, std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Mutable staging area; build() yields the normalized immutable Graph.
/// Duplicate edges collapse, self-loops are rejected.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(std::size_t n) : adjacency_(n) {}
    explicit GraphBuilder(const Graph& g) : adjacency_(g.adjacency_), labels_(g.labels_) {}

    [[nodiscard]] std::size_t order() const noexcept { return adjacency_.size(); }

    Vertex add_vertex() {
        adjacency_.emplace_back();
        return static_cast<Vertex>(adjacency_.size() - 1);
    }
    Vertex add_vertex(std::string label) {
        Vertex v = add_vertex();
        labels_[v] = std::move(label);
        return v;
    }
    void ensure_order(std::size_t n) {
        if (adjacency_.size() < n) adjacency_.resize(n);
    }

    void add_edge(Vertex u, Vertex v) {
        if (u == v) throw graph_error("self-loop at vertex " + std::to_string(u));
        if (u >= order() || v >= order())
            throw graph_error("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }

    void remove_edge(Vertex u, Vertex v) {
        auto drop = [](std::vector<Vertex>& list, Vertex x) {
            list.erase(std::remove(list.begin(), list.end(), x), list.end());
        };
        drop(adjacency_.at(u), v);
        drop(adjacency_.at(v), u);
    }

    void set_label(Vertex v, std::string label) {
        if (v >= order()) throw graph_error("label on missing vertex " + std::to_string(v));
        labels_[v] = std::move(label);
    }

    [[nodiscard]] Graph build() const {
        Graph g;
        g.adjacency_ = adjacency_;
        std::size_t twice = 0;
        for (auto& list : g.adjacency_) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
            twice += list.size();
        }
        g.edge_count_ = twice / 2;
        g.labels_ = labels_;
        return g;
    }

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::map<Vertex, std::string> labels_;
};

inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

/// Checks simplicity and symmetry of the adjacency structure.
inline bool audit(const Graph& g) {
    std::size_t twice = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        const auto& nu = g.neighbors(u);
        if (!std::is_sorted(nu.begin(), nu.end())) return false;
        if (std::adjacent_find(nu.begin(), nu.end()) != nu.end()) return false;
        for (Vertex v : nu) {
            if (v == u || v >= g.order()) return false;
            if (!g.adjacent(v, u)) return false;
        }
        twice += nu.size();
    }
    for (const auto& [v, _] : g.labels())
        if (v >= g.order()) return false;
    return twice == 2 * g.size();
}

enum class StandardKind { path, cycle, complete, empty };

inline Graph standard_graph(StandardKind kind, std::size_t n) {
    GraphBuilder b(n);
    switch (kind) {
    case StandardKind::path:
        for (std::size_t i = 1; i < n; ++i) b.add_edge(Vertex(i - 1), Vertex(i));
        break;
    case StandardKind::cycle:
        if (n < 3) throw graph_error("cycle needs at least 3 vertices");
        for (std::size_t i = 0; i < n; ++i) b.add_edge(Vertex(i), Vertex((i + 1) % n));
        break;
    case StandardKind::complete:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) b.add_edge(Vertex(i), Vertex(j));
        break;
    case StandardKind::empty:
        break;
    }
    return b.build();
}

inline Graph path_graph(std::size_t n) { return standard_graph(StandardKind::path, n); }
inline Graph cycle_graph(std::size_t n) { return standard_graph(StandardKind::cycle, n); }
inline Graph complete_graph(std::size_t n) { return standard_graph(StandardKind::complete, n); }
inline Graph empty_graph(std::size_t n) { return standard_graph(StandardKind::empty, n); }

inline Graph add_leaf(const Graph& g, Vertex v) {
    g.check_vertex(v);
    GraphBuilder b(g);
    b.add_edge(v, b.add_vertex());
    return b.build();
}

inline Graph subdivide_edge(const Graph& g, Vertex u, Vertex v) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (!g.adjacent(u, v))
        throw graph_error("cannot subdivide non-edge " + std::to_string(u) + "-" + std::to_string(v));
    GraphBuilder b(g);
    b.remove_edge(u, v);
    Vertex x = b.add_vertex();
    b.add_edge(u, x);
    b.add_edge(x, v);
    return b.build();
}

/// Appends a path on `len` new vertices whose first vertex is joined to v.
inline Graph append_path(const Graph& g, Vertex v, std::size_t len) {
    g.check_vertex(v);
    GraphBuilder b(g);
    Vertex prev = v;
    for (std::size_t i = 0; i < len; ++i) {
        Vertex x = b.add_vertex();
        b.add_edge(prev, x);
        prev = x;
    }
    return b.build();
}

/// g's identifiers are kept; h's are shifted by |V(g)| and its labels get `h_prefix`.
inline Graph disjoint_union(const Graph& g, const Graph& h, std::string_view h_prefix = "h.") {
    GraphBuilder b(g);
    const auto shift = static_cast<Vertex>(g.order());
    b.ensure_order(g.order() + h.order());
    for (auto [u, v] : h.edges()) b.add_edge(u + shift, v + shift);
    for (const auto& [v, l] : h.labels()) b.set_label(v + shift, std::string(h_prefix) + l);
    return b.build();
}

struct Identification {
    Graph graph;
    /// Where each vertex of h landed in the result.
    std::vector<Vertex> h_to_result;
};

/// Glues h onto g by identifying each listed h-vertex with its g-partner.
/// Non-identified h-vertices are appended in increasing h order; their labels
/// are carried over unless the g-side already labels the vertex.
inline Identification identify_vertices_mapped(const Graph& g, const Graph& h,
                                               const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    std::vector<std::optional<Vertex>> partner(h.order());
    std::vector<bool> g_used(g.order(), false);
    for (auto [gv, hv] : pairs) {
        g.check_vertex(gv);
        h.check_vertex(hv);
        if (g_used[gv] || partner[hv])
            throw graph_error("identification pairs must be injective on both sides");
        g_used[gv] = true;
        partner[hv] = gv;
    }
    GraphBuilder b(g);
    std::vector<Vertex> map(h.order());
    for (Vertex hv = 0; hv < h.order(); ++hv) {
        if (partner[hv]) {
            map[hv] = *partner[hv];
        } else {
            map[hv] = b.add_vertex();
            if (auto l = h.label(hv)) b.set_label(map[hv], *l);
        }
    }
    for (auto [u, v] : h.edges()) b.add_edge(map[u], map[v]);
    return {b.build(), std::move(map)};
}

inline Graph identify_vertices(const Graph& g, const Graph& h,
                               const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    return identify_vertices_mapped(g, h, pairs).graph;
}

inline Graph with_label(const Graph& g, Vertex v, std::string label) {
    GraphBuilder b(g);
    b.set_label(v, std::move(label));
    return b.build();
}

/// True when `host` sits inside `result` as an induced subgraph via `embedding`.
inline bool is_induced_embedding(const Graph& host, const Graph& result, const std::vector<Vertex>& embedding) {
    if (embedding.size() != host.order()) return false;
    std::vector<bool> seen(result.order(), false);
    for (Vertex v : embedding) {
        if (v >= result.order() || seen[v]) return false;
        seen[v] = true;
    }
    for (Vertex u = 0; u < host.order(); ++u)
        for (Vertex v = u + 1; v < host.order(); ++v)
            if (host.adjacent(u, v) != result.adjacent(embedding[u], embedding[v])) return false;
    return true;
}

}  // namespace fpd
