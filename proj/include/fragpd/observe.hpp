#pragma once

// Power-domination propagation: the domination step N[S] followed by the
// zero-forcing closure.

#include <functional>
#include <queue>
#include <span>
#include <vector>

#include "fragpd/graph.hpp"

namespace fpd {

struct Force {
    Vertex forcer;
    Vertex forced;
    friend bool operator==(const Force&, const Force&) = default;
};

struct ObservationResult {
    VertexSet observed;
    /// N[S] after the domination step; never contains a forced vertex.
    VertexSet dominated;
    /// Zero-forcing steps only, in the order they were applied.
    std::vector<Force> trace;
};

/// Reusable propagation workspace for one graph. Not thread-safe; use one
/// per thread. Forces are applied lowest-forcer-first.
class Propagator {
public:
    explicit Propagator(const Graph& g)
        : graph_(&g), observed_(g.order(), 0), unobserved_nbrs_(g.order(), 0) {}

    /// Runs the process from `active` and returns |Obs(G; active)|.
    std::size_t run(std::span<const Vertex> active, std::vector<Force>* trace = nullptr) {
        const Graph& g = *graph_;
        const std::size_t n = g.order();
        std::fill(observed_.begin(), observed_.end(), 0);
        count_ = 0;
        for (Vertex s : active) {
            g.check_vertex(s);
            mark(s);
            for (Vertex y : g.neighbors(s)) mark(y);
        }
        if (count_ == 0) return 0;
        for (Vertex v = 0; v < n; ++v) {
            std::uint32_t c = 0;
            for (Vertex y : g.neighbors(v)) c += observed_[y] ? 0 : 1;
            unobserved_nbrs_[v] = c;
        }
        std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
        for (Vertex v = 0; v < n; ++v)
            if (observed_[v] && unobserved_nbrs_[v] == 1) ready.push(v);
        while (!ready.empty()) {
            Vertex x = ready.top();
            ready.pop();
            if (unobserved_nbrs_[x] != 1) continue;
            Vertex y = 0;
            for (Vertex z : g.neighbors(x))
                if (!observed_[z]) { y = z; break; }
            mark(y);
            if (trace) trace->push_back({x, y});
            for (Vertex z : g.neighbors(y)) {
                if (--unobserved_nbrs_[z] == 1 && observed_[z]) ready.push(z);
            }
            if (unobserved_nbrs_[y] == 1) ready.push(y);
        }
        return count_;
    }

    [[nodiscard]] bool observed(Vertex v) const { return observed_[v] != 0; }
    [[nodiscard]] const std::vector<char>& observed_flags() const noexcept { return observed_; }
    [[nodiscard]] std::size_t observed_count() const noexcept { return count_; }

    [[nodiscard]] VertexSet observed_set() const {
        std::vector<Vertex> out;
        out.reserve(count_);
        for (Vertex v = 0; v < observed_.size(); ++v)
            if (observed_[v]) out.push_back(v);
        return VertexSet(std::move(out));
    }

private:
    void mark(Vertex v) {
        if (!observed_[v]) {
            observed_[v] = 1;
            ++count_;
        }
    }

    const Graph* graph_;
    std::vector<char> observed_;
    std::vector<std::uint32_t> unobserved_nbrs_;
    std::size_t count_ = 0;
};

inline ObservationResult observe(const Graph& g, const VertexSet& active) {
    for (Vertex v : active) g.check_vertex(v);
    ObservationResult r;
    r.dominated = g.closed_neighborhood(active);
    Propagator p(g);
    p.run(active.members(), &r.trace);
    r.observed = p.observed_set();
    return r;
}

inline std::size_t observed_count(const Graph& g, const VertexSet& active) {
    Propagator p(g);
    return p.run(active.members());
}

inline bool is_power_dominating(const Graph& g, const VertexSet& s) {
    return observed_count(g, s) == g.order();
}

}  // namespace fpd
