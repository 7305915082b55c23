#pragma once

// Exact expected-value polynomials E(G; S, q) of the number of observed
// vertices when each sensor fails independently with probability q.
//
// Everything is driven by a table of |Obs(G; W)| over all subsets W of the
// support, filled once per computation.

#include <bit>
#include <map>

#include "fragpd/observe.hpp"
#include "fragpd/placement.hpp"
#include "fragpd/polynomial.hpp"

namespace fpd {

inline constexpr std::size_t default_enumeration_cap = 20;

class enumeration_cap_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ExPoly {
    Polynomial power;
    /// a_k = sum over k-subsets W of |Obs(G; W)|; set placements only.
    std::optional<std::vector<Integer>> bernstein;
    std::size_t s = 0;
    std::size_t d = 0;
};

/// |Obs(G; W)| for every W within the support, indexed by bitmask over
/// support().members() (bit i <-> i-th smallest support vertex).
class SubsetTable {
public:
    SubsetTable(const Graph& g, const VertexSet& support, std::size_t cap = default_enumeration_cap)
        : support_(support) {
        check_cap(support.size(), cap);
        for (Vertex v : support) g.check_vertex(v);
        const std::size_t s = support.size();
        sizes_.assign(std::size_t{1} << s, 0);
        Propagator p(g);
        std::vector<Vertex> active;
        for (std::size_t mask = 1; mask < sizes_.size(); ++mask) {
            active.clear();
            for (std::size_t i = 0; i < s; ++i)
                if (mask >> i & 1u) active.push_back(support[i]);
            sizes_[mask] = p.run(active);
        }
    }

    static void check_cap(std::size_t support_size, std::size_t cap) {
        if (cap > 30) cap = 30;
        if (support_size > cap)
            throw enumeration_cap_error("support of size " + std::to_string(support_size) +
                                        " exceeds the enumeration cap of " + std::to_string(cap));
    }

    [[nodiscard]] const VertexSet& support() const noexcept { return support_; }
    [[nodiscard]] std::size_t subset_count() const noexcept { return sizes_.size(); }
    [[nodiscard]] std::size_t size(std::size_t mask) const { return sizes_.at(mask); }

    [[nodiscard]] std::size_t mask_of(const VertexSet& w) const {
        std::size_t mask = 0;
        for (Vertex v : w) {
            auto it = std::lower_bound(support_.begin(), support_.end(), v);
            if (it == support_.end() || *it != v) throw graph_error("vertex outside the support");
            mask |= std::size_t{1} << (it - support_.begin());
        }
        return mask;
    }

    /// a_0..a_s.
    [[nodiscard]] std::vector<Integer> level_sums() const {
        std::vector<std::uint64_t> acc(support_.size() + 1, 0);
        for (std::size_t mask = 0; mask < sizes_.size(); ++mask)
            acc[std::popcount(mask)] += sizes_[mask];
        return {acc.begin(), acc.end()};
    }

private:
    VertexSet support_;
    std::vector<std::size_t> sizes_;
};

/// Expands sum_k a_k q^{s-k} (1-q)^k with s = a.size() - 1.
inline Polynomial basis_convert(const std::vector<Integer>& a) {
    if (a.empty()) return {};
    const long long s = static_cast<long long>(a.size()) - 1;
    std::vector<Integer> out(a.size());
    for (long long k = 0; k <= s; ++k) {
        if (a[k] == 0) continue;
        // q^{s-k} (1-q)^k = sum_j C(k,j) (-1)^j q^{s-k+j}
        for (long long j = 0; j <= k; ++j) {
            Integer term = a[k] * binomial(k, j);
            if (j % 2) out[s - k + j] -= term; else out[s - k + j] += term;
        }
    }
    return Polynomial(std::move(out));
}

/// Inverse of basis_convert for polynomials of degree <= s.
inline std::vector<Integer> power_to_bernstein(const Polynomial& p, std::size_t s) {
    if (p.degree() > static_cast<int>(s))
        throw std::invalid_argument("polynomial degree exceeds basis size");
    // substituting q = x/(1+x) and scaling by (1+x)^s turns the basis element
    // for k into x^{s-k}
    std::vector<Integer> a(s + 1);
    const auto ss = static_cast<long long>(s);
    for (long long j = 0; j <= p.degree(); ++j) {
        const Integer& c = p.coeffs()[j];
        if (c == 0) continue;
        for (long long k = 0; k + j <= ss; ++k) a[k] += c * binomial(ss - j, ss - k - j);
    }
    return a;
}

inline std::vector<Integer> bernstein_coefficients(const Graph& g, const VertexSet& s,
                                                   std::size_t cap = default_enumeration_cap) {
    return SubsetTable(g, s, cap).level_sums();
}

inline ExPoly expected_polynomial_set(const SubsetTable& table) {
    ExPoly e;
    e.s = e.d = table.support().size();
    e.bernstein = table.level_sums();
    e.power = basis_convert(*e.bernstein);
    return e;
}

inline ExPoly expected_polynomial_set(const Graph& g, const VertexSet& s, std::size_t cap = default_enumeration_cap) {
    return expected_polynomial_set(SubsetTable(g, s, cap));
}

namespace detail {

/// Subsets sharing (f(S \ S'), multiset of f over S') share their weight
/// q^{f(S\S')} prod_{s in S'} (1 - q^{f(s)}); this groups them.
class WeightClasses {
public:
    explicit WeightClasses(const Placement& m) {
        for (auto [_, f] : m.entries()) mult_.push_back(f);
        const std::size_t total = m.total();
        class_of_.resize(std::size_t{1} << mult_.size());
        std::map<std::pair<std::size_t, std::vector<unsigned>>, std::size_t> index;
        for (std::size_t mask = 0; mask < class_of_.size(); ++mask) {
            std::vector<unsigned> inside;
            std::size_t in_sum = 0;
            for (std::size_t i = 0; i < mult_.size(); ++i)
                if (mask >> i & 1u) {
                    inside.push_back(mult_[i]);
                    in_sum += mult_[i];
                }
            std::sort(inside.begin(), inside.end());
            auto key = std::make_pair(total - in_sum, std::move(inside));
            auto [it, fresh] = index.emplace(key, weights_.size());
            if (fresh) {
                Polynomial w = Polynomial::monomial(key.first);
                for (unsigned f : key.second) w *= Polynomial::one_minus_q_pow(f);
                weights_.push_back(std::move(w));
            }
            class_of_[mask] = it->second;
        }
    }

    [[nodiscard]] std::size_t class_count() const noexcept { return weights_.size(); }
    [[nodiscard]] std::size_t class_of(std::size_t mask) const { return class_of_[mask]; }
    [[nodiscard]] const Polynomial& weight(std::size_t c) const { return weights_[c]; }

private:
    std::vector<unsigned> mult_;
    std::vector<std::size_t> class_of_;
    std::vector<Polynomial> weights_;
};

}  // namespace detail

inline ExPoly expected_polynomial_multiset(const SubsetTable& table, const Placement& m) {
    if (table.support() != m.support()) throw std::invalid_argument("table and placement supports differ");
    detail::WeightClasses classes(m);
    std::vector<std::uint64_t> acc(classes.class_count(), 0);
    for (std::size_t mask = 0; mask < table.subset_count(); ++mask) acc[classes.class_of(mask)] += table.size(mask);
    ExPoly e;
    e.s = m.support_size();
    e.d = m.total();
    for (std::size_t c = 0; c < acc.size(); ++c) e.power.add_scaled(classes.weight(c), Integer(acc[c]));
    return e;
}

inline ExPoly expected_polynomial_multiset(const Graph& g, const Placement& m,
                                           std::size_t cap = default_enumeration_cap) {
    return expected_polynomial_multiset(SubsetTable(g, m.support(), cap), m);
}

/// Pr(v observed) for every vertex v, indexed by vertex.
inline std::vector<Polynomial> per_vertex_probabilities(const Graph& g, const Placement& m,
                                                        std::size_t cap = default_enumeration_cap) {
    SubsetTable::check_cap(m.support_size(), cap);
    m.check_against(g);
    const VertexSet support = m.support();
    detail::WeightClasses classes(m);
    const std::size_t n = g.order();
    const std::size_t k = classes.class_count();
    std::vector<std::uint32_t> counts(n * k, 0);
    Propagator p(g);
    std::vector<Vertex> active;
    for (std::size_t mask = 1; mask < (std::size_t{1} << support.size()); ++mask) {
        active.clear();
        for (std::size_t i = 0; i < support.size(); ++i)
            if (mask >> i & 1u) active.push_back(support[i]);
        p.run(active);
        const std::size_t c = classes.class_of(mask);
        const auto& flags = p.observed_flags();
        for (std::size_t v = 0; v < n; ++v)
            if (flags[v]) ++counts[v * k + c];
    }
    std::vector<Polynomial> out(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t c = 0; c < k; ++c)
            if (counts[v * k + c]) out[v].add_scaled(classes.weight(c), Integer(counts[v * k + c]));
    return out;
}

}  // namespace fpd
