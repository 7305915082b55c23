#pragma once

// Placement comparison through the subset sums lambda_k, cross-checked on a
// grid of exact rational failure probabilities.

#include "fragpd/expoly.hpp"

namespace fpd {

enum class Dominance { dominates_strictly, dominates, incomparable_by_sums };

inline const char* to_string(Dominance d) {
    switch (d) {
    case Dominance::dominates_strictly: return "dominates_strictly";
    case Dominance::dominates: return "dominates";
    case Dominance::incomparable_by_sums: return "incomparable_by_sums";
    }
    return "?";
}

/// Uniform grid j/1001, j = 1..1000, plus both endpoints.
inline std::vector<Rational> comparison_grid(std::size_t interior = 1000) {
    std::vector<Rational> grid;
    grid.reserve(interior + 2);
    grid.emplace_back(0);
    for (std::size_t j = 1; j <= interior; ++j) grid.emplace_back(Rational(j) / Rational(interior + 1));
    grid.emplace_back(1);
    return grid;
}

struct GridSigns {
    /// Counts of grid points where E_b - E_a is negative, zero, positive.
    std::size_t negative = 0;
    std::size_t zero = 0;
    std::size_t positive = 0;
    /// Interior points only.
    std::size_t interior_nonpositive = 0;
};

inline GridSigns grid_signs(const Polynomial& diff, const std::vector<Rational>& grid) {
    GridSigns s;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Rational v = diff.evaluate(grid[i]);
        if (v < 0) ++s.negative; else if (v == 0) ++s.zero; else ++s.positive;
        const bool interior = i != 0 && i + 1 != grid.size();
        if (interior && v <= 0) ++s.interior_nonpositive;
    }
    return s;
}

/// Result of asking whether placement b is at least as good as placement a.
struct Comparison {
    Dominance verdict = Dominance::incomparable_by_sums;
    std::vector<Integer> lambda_a;
    std::vector<Integer> lambda_b;
    Polynomial poly_a;
    Polynomial poly_b;
    GridSigns signs;
    /// E_a <= E_b on the grid (and < on the interior for strict verdicts).
    bool grid_consistent = true;
    bool strict_at_half = false;
};

inline Comparison compare_placements(const Graph& g, const VertexSet& a, const VertexSet& b,
                                     std::size_t cap = default_enumeration_cap) {
    if (a.size() != b.size())
        throw std::invalid_argument("placements must have equal size (" + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    const ExPoly ea = expected_polynomial_set(g, a, cap);
    const ExPoly eb = expected_polynomial_set(g, b, cap);
    Comparison c;
    c.lambda_a = *ea.bernstein;
    c.lambda_b = *eb.bernstein;
    c.poly_a = ea.power;
    c.poly_b = eb.power;
    bool le = true, strict = false;
    for (std::size_t k = 1; k < c.lambda_a.size(); ++k) {
        if (c.lambda_a[k] > c.lambda_b[k]) le = false;
        if (c.lambda_a[k] < c.lambda_b[k]) strict = true;
    }
    const Polynomial diff = eb.power - ea.power;
    c.signs = grid_signs(diff, comparison_grid());
    c.strict_at_half = diff.evaluate(Rational(1, 2)) > 0;
    if (le) {
        c.verdict = strict ? Dominance::dominates_strictly : Dominance::dominates;
        c.grid_consistent = c.signs.negative == 0 && (!strict || c.signs.interior_nonpositive == 0);
        if (strict && !c.strict_at_half) c.grid_consistent = false;
    }
    return c;
}

}  // namespace fpd
