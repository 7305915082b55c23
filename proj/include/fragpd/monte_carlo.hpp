#pragma once

// Sampling estimate of E(G; M, q). Uses std::mt19937_64 (fully specified by
// the standard) and draws uniforms as the top 53 bits of each output, so a
// seed reproduces the same stream on every conforming platform.

#include <cmath>
#include <random>

#include "fragpd/expoly.hpp"

namespace fpd {

struct MonteCarloEstimate {
    double mean = 0;
    double standard_error = 0;
    std::size_t trials = 0;
};

inline MonteCarloEstimate monte_carlo_estimate(const Graph& g, const Placement& m, double q, std::size_t trials,
                                               std::uint64_t seed) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("failure probability must lie in [0, 1]");
    if (trials < 1) throw std::invalid_argument("at least one trial is required");
    SubsetTable::check_cap(m.support_size(), default_enumeration_cap);
    m.check_against(g);

    const auto& entries = m.entries();
    // |Obs| is a function of the surviving subset; cache it per bitmask
    std::vector<std::int64_t> cache(std::size_t{1} << entries.size(), -1);
    Propagator p(g);
    std::vector<Vertex> active;
    std::mt19937_64 rng(seed);
    auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    // Welford running mean / sum of squared deviations
    double mean = 0, m2 = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t mask = 0;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            bool survives = false;
            for (unsigned c = 0; c < entries[i].second; ++c)
                if (!(uniform() < q)) survives = true;
            if (survives) mask |= std::size_t{1} << i;
        }
        if (cache[mask] < 0) {
            active.clear();
            for (std::size_t i = 0; i < entries.size(); ++i)
                if (mask >> i & 1u) active.push_back(entries[i].first);
            cache[mask] = static_cast<std::int64_t>(p.run(active));
        }
        const auto x = static_cast<double>(cache[mask]);
        const double delta = x - mean;
        mean += delta / static_cast<double>(t + 1);
        m2 += delta * (x - mean);
    }
    MonteCarloEstimate est;
    est.trials = trials;
    const auto n = static_cast<double>(trials);
    est.mean = mean;
    if (trials > 1) est.standard_error = std::sqrt(std::max(0.0, m2 / (n - 1)) / n);
    return est;
}

}  // namespace fpd
