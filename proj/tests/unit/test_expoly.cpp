#include <gtest/gtest.h>

#include <random>

#include "fragpd/expoly.hpp"
#include "fragpd/families.hpp"
#include "support/oracles.hpp"

using namespace fpd;

namespace {

std::vector<Integer> ints(std::initializer_list<long long> xs) { return {xs.begin(), xs.end()}; }

Polynomial sum(const std::vector<Polynomial>& ps) {
    Polynomial s;
    for (const auto& p : ps) s += p;
    return s;
}

}  // namespace

TEST(ExpectedSet, SingleVertex) {
    const ExPoly e = expected_polynomial_set(empty_graph(1), {0});
    EXPECT_EQ(e.power, (Polynomial{1, -1}));
    EXPECT_EQ(*e.bernstein, ints({0, 1}));
}

TEST(ExpectedSet, TriangleWithLeaves) {
    const auto [g, s] = fig3_base();
    const ExPoly e = expected_polynomial_set(g, s);
    EXPECT_EQ(e.power, (Polynomial{7, -4, 0, -3}));
    EXPECT_EQ(*e.bernstein, ints({0, 13, 17, 7}));
    EXPECT_EQ(e.s, 3u);
    EXPECT_EQ(e.d, 3u);
}

TEST(ExpectedSet, LinearCounterexample) {
    const auto [g, s] = fig4_counterexample();
    const ExPoly e = expected_polynomial_set(g, s);
    EXPECT_EQ(e.power, (Polynomial{43, -43}));
    EXPECT_EQ(*e.bernstein, ints({0, 43, 86, 43}));
}

TEST(ExpectedSet, IsolatedPair) {
    EXPECT_EQ(bernstein_coefficients(empty_graph(2), {0, 1}), ints({0, 2, 2}));
}

TEST(ExpectedSet, CapIsEnforced) {
    std::vector<Vertex> all(21);
    for (Vertex v = 0; v < 21; ++v) all[v] = v;
    try {
        expected_polynomial_set(empty_graph(21), VertexSet(all));
        FAIL();
    } catch (const enumeration_cap_error& e) {
        EXPECT_NE(std::string(e.what()).find("20"), std::string::npos);
    }
    EXPECT_THROW(expected_polynomial_set(empty_graph(5), {0, 1, 2}, 2), enumeration_cap_error);
    EXPECT_THROW(expected_polynomial_set(empty_graph(2), {5}), graph_error);
}

TEST(ExpectedMultiset, Examples) {
    EXPECT_EQ(expected_polynomial_multiset(empty_graph(1), (Placement{{0, 2}})).power, (Polynomial{1, 0, -1}));
    const ExPoly e = expected_polynomial_multiset(empty_graph(2), Placement{{0, 1}, {1, 2}});
    EXPECT_EQ(e.power, (Polynomial{2, -1, -1}));
    EXPECT_FALSE(e.bernstein);
    EXPECT_EQ(e.d, 3u);
    EXPECT_THROW((Placement{{0, 0}}), graph_error);
}

TEST(ExpectedMultiset, UnitMultiplicityMatchesSet) {
    const auto [g, s] = fig3_base();
    EXPECT_EQ(expected_polynomial_multiset(g, Placement::from_set(s)).power, expected_polynomial_set(g, s).power);
}

TEST(PerVertex, Examples) {
    const auto k1 = per_vertex_probabilities(empty_graph(1), Placement::from_set({0}));
    EXPECT_EQ(k1.at(0), (Polynomial{1, -1}));
    for (const auto& p : per_vertex_probabilities(path_graph(3), Placement::from_set({1})))
        EXPECT_EQ(p, (Polynomial{1, -1}));
    const auto [g, s] = fig3_base();
    EXPECT_EQ(sum(per_vertex_probabilities(g, Placement::from_set(s))), (Polynomial{7, -4, 0, -3}));
}

TEST(BasisConvert, Examples) {
    EXPECT_EQ(basis_convert(ints({0, 13, 17, 7})), (Polynomial{7, -4, 0, -3}));
    EXPECT_EQ(basis_convert(ints({0, 1})), (Polynomial{1, -1}));
    EXPECT_EQ(power_to_bernstein(Polynomial{7, -4, 0, -3}, 3), ints({0, 13, 17, 7}));
    EXPECT_THROW(power_to_bernstein(Polynomial{0, 0, 1}, 1), std::invalid_argument);
}

TEST(BasisConvert, RoundTripAgainstInterpolation) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t s = rng() % 9;
        std::vector<Integer> a(s + 1);
        for (auto& x : a) x = static_cast<long long>(rng() % 2001) - 1000;
        const Polynomial p = basis_convert(a);
        ASSERT_EQ(power_to_bernstein(p, s), a);
        const auto recovered = oracle::recover_basis(p, s);
        for (std::size_t k = 0; k <= s; ++k) ASSERT_EQ(recovered[k], Rational(a[k]));
    }
}

TEST(ExpectedSet, MatchesRationalOracle) {
    std::mt19937_64 rng(43);
    const std::vector<Rational> qs{Rational(0), Rational(1, 3), Rational(1, 2), Rational(5, 7), Rational(1)};
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = oracle::random_sparse_graph(2 + rng() % 25, rng() % 5, rng);
        const auto s = oracle::random_subset(g.order(), 1 + rng() % 5, rng);
        const ExPoly e = expected_polynomial_set(g, VertexSet(s));
        for (const auto& q : qs) ASSERT_EQ(e.power.evaluate(q), oracle::expected_value(g, oracle::as_set(s), q));
    }
}

TEST(ExpectedMultiset, MatchesRationalOracle) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_sparse_graph(2 + rng() % 20, rng() % 5, rng);
        const auto s = oracle::random_subset(g.order(), 1 + rng() % 4, rng);
        std::map<Vertex, unsigned> mult;
        for (Vertex v : s) mult[v] = 1 + static_cast<unsigned>(rng() % 4);
        const Placement m(mult);
        const ExPoly e = expected_polynomial_multiset(g, m);
        ASSERT_EQ(e.power.evaluate(Rational(2, 5)), oracle::expected_value(g, m.entries(), Rational(2, 5)));
        ASSERT_EQ(sum(per_vertex_probabilities(g, m)), e.power);
    }
}

TEST(ExpectedSet, BoundaryAndRange) {
    std::mt19937_64 rng(53);
    const auto grid = std::vector<Rational>{Rational(1, 1001), Rational(250, 1001), Rational(1000, 1001)};
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(1 + rng() % 40, 8, rng);
        const VertexSet s(oracle::random_subset(g.order(), 1 + rng() % 6, rng));
        const ExPoly e = expected_polynomial_set(g, s);
        ASSERT_EQ(e.power.coeff(0), Integer(observed_count(g, s)));
        ASSERT_EQ(e.power.evaluate(Rational(1)), 0);
        for (const auto& q : grid) {
            const Rational v = e.power.evaluate(q);
            ASSERT_GE(v, 0);
            ASSERT_LE(v, Rational(g.order()));
        }
    }
}

TEST(SubsetTable, MaskLookup) {
    const auto [g, s] = fig4_counterexample();
    const SubsetTable t(g, s);
    EXPECT_EQ(t.size(t.mask_of({0})), 11u);
    EXPECT_EQ(t.size(t.mask_of({0, 1})), 26u);
    EXPECT_EQ(t.size(t.mask_of({1, 2})), 34u);
    EXPECT_THROW(static_cast<void>(t.mask_of({5})), graph_error);
}
