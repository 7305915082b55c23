#pragma once

// Checks on the subset-observation sums a_k: co-polynomiality, linearity,
// the alpha-recursion degree condition, the quadratic identity, and the
// coefficient sign audit for multiset placements.

#include <stdexcept>

#include "fragpd/expoly.hpp"

namespace fpd {

/// Raised when two independently computed quantities that must agree do not.
class consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct CopolyResult {
    bool same = false;
    /// Smallest k with a_k(g1) != a_k(g2).
    std::optional<std::size_t> first_difference;
    std::vector<Integer> lhs;
    std::vector<Integer> rhs;
};

inline CopolyResult copolynomial_check(const Graph& g1, const VertexSet& s1, const Graph& g2, const VertexSet& s2,
                                       std::size_t cap = default_enumeration_cap) {
    if (s1.size() != s2.size())
        throw std::invalid_argument("co-polynomiality needs placements of equal size (" + std::to_string(s1.size()) +
                                    " vs " + std::to_string(s2.size()) + ")");
    const ExPoly e1 = expected_polynomial_set(g1, s1, cap);
    const ExPoly e2 = expected_polynomial_set(g2, s2, cap);
    CopolyResult r;
    r.lhs = *e1.bernstein;
    r.rhs = *e2.bernstein;
    for (std::size_t k = 0; k < r.lhs.size(); ++k)
        if (r.lhs[k] != r.rhs[k]) {
            r.first_difference = k;
            break;
        }
    r.same = !r.first_difference;
    if (r.same != (e1.power == e2.power)) throw consistency_error("basis coefficients disagree with power form");
    return r;
}

/// a_k = C(s-1, k-1) a_1 for all 1 <= k <= s.
inline bool linearity_condition(const std::vector<Integer>& a) {
    const long long s = static_cast<long long>(a.size()) - 1;
    for (long long k = 1; k <= s; ++k)
        if (a[k] != binomial(s - 1, k - 1) * a[1]) return false;
    return true;
}

inline bool linearity_check(const Graph& g, const VertexSet& s, std::size_t cap = default_enumeration_cap) {
    const ExPoly e = expected_polynomial_set(g, s, cap);
    const bool holds = linearity_condition(*e.bernstein);
    if (holds != (e.power.degree() <= 1))
        throw consistency_error("linearity condition disagrees with the computed degree");
    return holds;
}

/// First X subset of S (by bitmask over sorted S) with
/// |Obs(X)| != sum_{v in X} |Obs(v)|, if any.
struct AdditivityResult {
    bool holds = true;
    std::optional<VertexSet> witness;
    std::size_t observed = 0;
    std::size_t singleton_sum = 0;
};

inline AdditivityResult additivity_check(const Graph& g, const VertexSet& s,
                                         std::size_t cap = default_enumeration_cap) {
    const SubsetTable table(g, s, cap);
    AdditivityResult r;
    for (std::size_t mask = 1; mask < table.subset_count(); ++mask) {
        std::size_t sum = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (mask >> i & 1u) sum += table.size(std::size_t{1} << i);
        if (sum != table.size(mask)) {
            std::vector<Vertex> xs;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (mask >> i & 1u) xs.push_back(s[i]);
            r.holds = false;
            r.witness = VertexSet(std::move(xs));
            r.observed = table.size(mask);
            r.singleton_sum = sum;
            break;
        }
    }
    return r;
}

/// alpha_{s,l}(k, i) for 1 <= k <= s, 1 <= i <= l.
class AlphaTable {
public:
    AlphaTable(std::size_t s, std::size_t l) : s_(s), l_(l) {
        if (l < 1 || l > s) throw std::invalid_argument("alpha table needs 1 <= l <= s");
        entries_.assign(s * l, 0);
        const auto ss = static_cast<long long>(s);
        const auto ll = static_cast<long long>(l);
        for (long long k = 1; k <= ss; ++k) {
            at_mut(k, ll) = binomial(ss - ll, k - ll);
            for (long long i = ll - 1; i >= 1; --i) {
                Integer v = binomial(ss - i, k - i);
                for (long long j = i + 1; j <= ll; ++j) v -= at(k, j) * binomial(ss - i, j - i);
                at_mut(k, i) = v;
            }
        }
    }

    [[nodiscard]] std::size_t s() const noexcept { return s_; }
    [[nodiscard]] std::size_t l() const noexcept { return l_; }
    [[nodiscard]] const Integer& at(long long k, long long i) const {
        if (k < 1 || i < 1 || k > static_cast<long long>(s_) || i > static_cast<long long>(l_))
            throw std::out_of_range("alpha index (" + std::to_string(k) + ", " + std::to_string(i) + ") out of range");
        return entries_.at(static_cast<std::size_t>((k - 1) * static_cast<long long>(l_) + (i - 1)));
    }

private:
    Integer& at_mut(long long k, long long i) {
        return entries_.at(static_cast<std::size_t>((k - 1) * static_cast<long long>(l_) + (i - 1)));
    }

    std::size_t s_;
    std::size_t l_;
    std::vector<Integer> entries_;
};

inline AlphaTable alpha_table(std::size_t s, std::size_t l) { return AlphaTable(s, l); }

/// a_k = sum_{i=1}^{l} alpha_{s,l}(k,i) a_i for all 1 <= k <= s.
inline bool degree_condition(const std::vector<Integer>& a, std::size_t l) {
    const std::size_t s = a.size() - 1;
    const AlphaTable alpha(s, l);
    for (std::size_t k = 1; k <= s; ++k) {
        Integer rhs = 0;
        for (std::size_t i = 1; i <= l; ++i) rhs += alpha.at(static_cast<long long>(k), static_cast<long long>(i)) * a[i];
        if (rhs != a[k]) return false;
    }
    return true;
}

struct DegreeCheck {
    bool condition_holds = false;
    bool degree_at_most = false;
};

/// condition_holds implies degree_at_most (raises consistency_error otherwise);
/// the converse is only reported.
inline DegreeCheck degree_condition_check(const ExPoly& e, std::size_t l) {
    if (!e.bernstein) throw std::invalid_argument("degree condition needs a set placement");
    if (l < 1 || l > e.s) throw std::invalid_argument("degree bound l must satisfy 1 <= l <= |S|");
    DegreeCheck r;
    r.condition_holds = degree_condition(*e.bernstein, l);
    r.degree_at_most = e.power.degree() <= static_cast<int>(l);
    if (r.condition_holds && !r.degree_at_most)
        throw consistency_error("degree condition holds but the polynomial has degree " +
                                std::to_string(e.power.degree()));
    if (l == 1 && r.condition_holds != r.degree_at_most)
        throw consistency_error("linearity condition disagrees with the computed degree");
    return r;
}

inline DegreeCheck degree_condition_check(const Graph& g, const VertexSet& s, std::size_t l,
                                          std::size_t cap = default_enumeration_cap) {
    return degree_condition_check(expected_polynomial_set(g, s, cap), l);
}

/// a_k = C(s-2,k-2) a_2 + (C(s-1,k-1) - (s-1) C(s-2,k-2)) a_1.
inline bool quadratic_identity(const std::vector<Integer>& a) {
    const long long s = static_cast<long long>(a.size()) - 1;
    const Integer a1 = s >= 1 ? a[1] : Integer(0);
    const Integer a2 = s >= 2 ? a[2] : Integer(0);
    for (long long k = 1; k <= s; ++k) {
        const Integer c2 = binomial(s - 2, k - 2);
        if (a[k] != c2 * a2 + (binomial(s - 1, k - 1) - (s - 1) * c2) * a1) return false;
    }
    return true;
}

inline bool quadratic_identity_check(const ExPoly& e) {
    if (!e.bernstein) throw std::invalid_argument("quadratic identity needs a set placement");
    if (e.power.degree() > 2)
        throw std::invalid_argument("quadratic identity requires degree <= 2, got " + std::to_string(e.power.degree()));
    return quadratic_identity(*e.bernstein);
}

inline bool quadratic_identity_check(const Graph& g, const VertexSet& s, std::size_t cap = default_enumeration_cap) {
    return quadratic_identity_check(expected_polynomial_set(g, s, cap));
}

enum class CoefficientClass { constant, uncontrolled_zero, nonpositive, free };

inline const char* to_string(CoefficientClass c) {
    switch (c) {
    case CoefficientClass::constant: return "constant";
    case CoefficientClass::uncontrolled_zero: return "zero";
    case CoefficientClass::nonpositive: return "nonpositive";
    case CoefficientClass::free: return "free";
    }
    return "?";
}

struct SignAuditEntry {
    std::size_t power;
    CoefficientClass cls;
    Integer coefficient;
    bool ok;
};

struct SignAudit {
    std::vector<SignAuditEntry> entries;
    bool passed = true;
};

/// Constant = |Obs(G;S)| >= 0, q^k vanishes for k outside R_1, and is <= 0
/// for k in R_1 \ R_2. Powers in R_2 are unconstrained.
inline SignAudit coefficient_sign_audit(const Polynomial& e, const Placement& m, std::size_t obs_all) {
    const SensorClasses rs = sensor_class_sets(m);
    SignAudit a;
    const std::size_t top = std::max<std::size_t>(m.total(), e.degree() < 0 ? 0 : std::size_t(e.degree()));
    for (std::size_t k = 0; k <= top; ++k) {
        SignAuditEntry entry{k, CoefficientClass::free, e.coeff(k), true};
        if (k == 0) {
            entry.cls = CoefficientClass::constant;
            entry.ok = entry.coefficient == Integer(obs_all) && entry.coefficient >= 0;
        } else if (!rs.r1.count(k)) {
            entry.cls = CoefficientClass::uncontrolled_zero;
            entry.ok = entry.coefficient == 0;
        } else if (!rs.r2.count(k)) {
            entry.cls = CoefficientClass::nonpositive;
            entry.ok = entry.coefficient <= 0;
        }
        a.passed = a.passed && entry.ok;
        a.entries.push_back(std::move(entry));
    }
    return a;
}

inline SignAudit coefficient_sign_audit(const Graph& g, const Placement& m, std::size_t cap = default_enumeration_cap) {
    const SubsetTable table(g, m.support(), cap);
    const ExPoly e = expected_polynomial_multiset(table, m);
    return coefficient_sign_audit(e.power, m, table.size(table.subset_count() - 1));
}

}  // namespace fpd
