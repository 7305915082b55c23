#pragma once

// Sensor placements: a support set with a positive multiplicity per vertex.

#include <map>
#include <set>

#include "fragpd/graph.hpp"

namespace fpd {

class Placement {
public:
    Placement() = default;

    /// Every vertex of s carries one sensor.
    static Placement from_set(const VertexSet& s) {
        Placement p;
        for (Vertex v : s) p.entries_.emplace_back(v, 1);
        return p;
    }

    Placement(std::initializer_list<std::pair<const Vertex, unsigned>> multiplicity)
        : Placement(std::map<Vertex, unsigned>(multiplicity)) {}

    explicit Placement(const std::map<Vertex, unsigned>& multiplicity) {
        for (auto [v, m] : multiplicity) {
            if (m == 0) throw graph_error("multiplicity of vertex " + std::to_string(v) + " must be positive");
            entries_.emplace_back(v, m);
        }
    }

    [[nodiscard]] VertexSet support() const {
        std::vector<Vertex> out;
        for (auto [v, _] : entries_) out.push_back(v);
        return VertexSet(std::move(out));
    }
    [[nodiscard]] std::size_t support_size() const noexcept { return entries_.size(); }
    /// Sorted by vertex.
    [[nodiscard]] const std::vector<std::pair<Vertex, unsigned>>& entries() const noexcept { return entries_; }
    [[nodiscard]] unsigned multiplicity(Vertex v) const {
        for (auto [u, m] : entries_)
            if (u == v) return m;
        return 0;
    }
    /// d = sum of multiplicities.
    [[nodiscard]] std::size_t total() const noexcept {
        std::size_t d = 0;
        for (auto [_, m] : entries_) d += m;
        return d;
    }
    [[nodiscard]] bool is_set() const noexcept {
        for (auto [_, m] : entries_)
            if (m != 1) return false;
        return true;
    }

    void check_against(const Graph& g) const {
        for (auto [v, _] : entries_) g.check_vertex(v);
    }

    friend bool operator==(const Placement&, const Placement&) = default;

private:
    std::vector<std::pair<Vertex, unsigned>> entries_;
};

struct SensorClasses {
    /// Multiplicity sums of nonempty sub-sets of the support.
    std::set<std::size_t> r1;
    /// Multiplicity sums of sub-sets with at least two vertices; the controllable powers.
    std::set<std::size_t> r2;
};

inline SensorClasses sensor_class_sets(const Placement& m) {
    SensorClasses out;
    for (auto [_, f] : m.entries()) {
        std::set<std::size_t> r1 = out.r1;
        for (std::size_t x : out.r1) {
            out.r2.insert(x + f);
            r1.insert(x + f);
        }
        r1.insert(f);
        out.r1 = std::move(r1);
    }
    return out;
}

}  // namespace fpd
