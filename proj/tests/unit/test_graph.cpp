#include <gtest/gtest.h>

#include <random>

#include "fragpd/graph.hpp"
#include "support/oracles.hpp"

using namespace fpd;

TEST(VertexSet, NormalizesAndComposes) {
    VertexSet a{3, 1, 3, 2};
    EXPECT_EQ(a.members(), (std::vector<Vertex>{1, 2, 3}));
    VertexSet b{2, 5};
    EXPECT_EQ(a.set_union(b), (VertexSet{1, 2, 3, 5}));
    EXPECT_EQ(a.set_difference(b), (VertexSet{1, 3}));
    EXPECT_EQ(a.set_intersection(b), (VertexSet{2}));
    EXPECT_TRUE(a.intersects(b));
    EXPECT_FALSE((VertexSet{1}).intersects(VertexSet{4}));
    EXPECT_TRUE((VertexSet{1, 3}).is_subset_of(a));
    a.insert(0);
    a.insert(2);
    EXPECT_EQ(a.size(), 4u);
}

TEST(Graph, StandardGraphs) {
    EXPECT_EQ(complete_graph(4).size(), 6u);
    EXPECT_EQ(empty_graph(3).order(), 3u);
    EXPECT_EQ(empty_graph(3).size(), 0u);
    EXPECT_EQ(cycle_graph(4).size(), 4u);
    EXPECT_EQ(path_graph(5).size(), 4u);
    EXPECT_THROW(cycle_graph(2), graph_error);
    EXPECT_EQ(path_graph(0).order(), 0u);
}

TEST(Graph, BuilderRejectsSelfLoopsAndCollapsesDuplicates) {
    GraphBuilder b(2);
    EXPECT_THROW(b.add_edge(1, 1), graph_error);
    EXPECT_THROW(b.add_edge(0, 2), graph_error);
    b.add_edge(0, 1);
    b.add_edge(1, 0);
    const Graph g = b.build();
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(audit(g));
}

TEST(Graph, AddLeaf) {
    EXPECT_EQ(add_leaf(empty_graph(1), 0), path_graph(2));
    const Graph p3 = add_leaf(path_graph(2), 0);
    EXPECT_EQ(p3.order(), 3u);
    EXPECT_EQ(p3.degree(0), 2u);
    EXPECT_EQ(p3.neighbors(2), std::vector<Vertex>{0});
    const Graph t = add_leaf(complete_graph(3), 1);
    EXPECT_EQ(t.order(), 4u);
    EXPECT_EQ(t.degree(1), 3u);
    EXPECT_THROW(add_leaf(path_graph(2), 7), graph_error);
}

TEST(Graph, SubdivideEdge) {
    const Graph p3 = subdivide_edge(path_graph(2), 0, 1);
    EXPECT_EQ(p3.order(), 3u);
    EXPECT_EQ(p3.degree(2), 2u);
    EXPECT_FALSE(p3.adjacent(0, 1));
    const Graph c4 = subdivide_edge(cycle_graph(3), 0, 1);
    EXPECT_EQ(c4.size(), 4u);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4.degree(v), 2u);
    const Graph star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    const Graph sub = subdivide_edge(star, 0, 3);
    EXPECT_EQ(sub.order(), 5u);
    EXPECT_EQ(sub.degree(0), 3u);
    EXPECT_THROW(subdivide_edge(path_graph(3), 0, 2), graph_error);
}

TEST(Graph, DisjointUnion) {
    EXPECT_EQ(disjoint_union(empty_graph(1), empty_graph(1)), empty_graph(2));
    const Graph u = disjoint_union(path_graph(2), path_graph(3));
    EXPECT_EQ(u.order(), 5u);
    EXPECT_EQ(u.size(), 3u);
    EXPECT_TRUE(u.adjacent(2, 3));
    EXPECT_EQ(disjoint_union(complete_graph(4), empty_graph(0)), complete_graph(4));
    const Graph labelled = with_label(empty_graph(1), 0, "x");
    EXPECT_EQ(disjoint_union(empty_graph(2), labelled).label(2), "h.x");
}

TEST(Graph, IdentifyVertices) {
    EXPECT_EQ(identify_vertices(path_graph(2), empty_graph(1), {{0, 0}}), path_graph(2));
    const Graph c4 = identify_vertices(path_graph(3), path_graph(3), {{0, 0}, {2, 2}});
    EXPECT_EQ(c4.order(), 4u);
    EXPECT_EQ(c4.size(), 4u);
    for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4.degree(v), 2u);
    const Graph bowtie = identify_vertices(complete_graph(3), complete_graph(3), {{0, 0}});
    EXPECT_EQ(bowtie.order(), 5u);
    EXPECT_EQ(bowtie.size(), 6u);
    EXPECT_EQ(bowtie.degree(0), 4u);
    EXPECT_THROW(identify_vertices(path_graph(3), path_graph(3), {{0, 0}, {0, 1}}), graph_error);
    EXPECT_THROW(identify_vertices(path_graph(3), path_graph(3), {{0, 0}, {1, 0}}), graph_error);
    // shared edge collapses
    const Graph k3 = identify_vertices(complete_graph(3), path_graph(2), {{0, 0}, {1, 1}});
    EXPECT_EQ(k3, complete_graph(3));
}

TEST(Graph, AppendPath) {
    EXPECT_EQ(append_path(empty_graph(1), 0, 0), empty_graph(1));
    EXPECT_EQ(append_path(empty_graph(1), 0, 2), path_graph(3));
    const Graph base = append_path(cycle_graph(4), 0, 1);
    EXPECT_EQ(base.order(), 5u);
    EXPECT_EQ(base.degree(0), 3u);
    EXPECT_EQ(base.degree(4), 1u);
}

TEST(Graph, InducedEmbedding) {
    const Graph host = path_graph(3);
    std::vector<Vertex> id{0, 1, 2};
    EXPECT_TRUE(is_induced_embedding(host, add_leaf(host, 1), id));
    GraphBuilder b(add_leaf(host, 1));
    b.add_edge(0, 2);
    EXPECT_FALSE(is_induced_embedding(host, b.build(), id));
}

TEST(Graph, RandomCompositionsStaySimple) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(1 + rng() % 12, 30, rng);
        const Graph h = oracle::random_graph(1 + rng() % 12, 30, rng);
        const Graph u = disjoint_union(g, h);
        ASSERT_TRUE(audit(u));
        EXPECT_EQ(u.order(), g.order() + h.order());
        EXPECT_EQ(u.size(), g.size() + h.size());
        std::vector<std::pair<Vertex, Vertex>> pairs;
        const std::size_t k = rng() % (std::min(g.order(), h.order()) + 1);
        for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(Vertex(i), Vertex(h.order() - 1 - i));
        const auto glued = identify_vertices_mapped(g, h, pairs);
        ASSERT_TRUE(audit(glued.graph));
        EXPECT_EQ(glued.graph.order(), g.order() + h.order() - k);
        std::vector<Vertex> id(g.order());
        for (Vertex v = 0; v < g.order(); ++v) id[v] = v;
        for (auto [u2, v2] : h.edges()) EXPECT_TRUE(glued.graph.adjacent(glued.h_to_result[u2], glued.h_to_result[v2]));
        if (g.order() >= 1) {
            ASSERT_TRUE(audit(add_leaf(g, 0)));
            ASSERT_TRUE(audit(append_path(g, 0, 3)));
        }
        if (g.size() > 0) {
            auto [a, c] = g.edges().front();
            const Graph s = subdivide_edge(g, a, c);
            ASSERT_TRUE(audit(s));
            EXPECT_EQ(s.size(), g.size() + 1);
        }
    }
}
