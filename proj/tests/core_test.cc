#include <gtest/gtest.h>

#include "hyperstab/bipartite.hpp"
#include "hyperstab/core.hpp"
#include "hyperstab/errors.hpp"

namespace hs = hyperstab;

namespace {

hs::KPartiteHypergraph complete222() {
    std::vector<hs::Edge> edges;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) edges.push_back({a, b, c});
    return hs::KPartiteHypergraph::build(3, {2, 2, 2}, edges);
}

TEST(Build, ValidatesInput) {
    EXPECT_THROW(hs::KPartiteHypergraph::build(1, {2}, {}), hs::BadParamsError);
    EXPECT_THROW(hs::KPartiteHypergraph::build(3, {2, 2}, {}), hs::BadParamsError);
    EXPECT_THROW(hs::KPartiteHypergraph::build(3, {2, -1, 2}, {}), hs::BadParamsError);
    EXPECT_THROW(hs::KPartiteHypergraph::build(3, {2, 2, 2}, {{0, 0}}), hs::BadArityError);
    EXPECT_THROW(hs::KPartiteHypergraph::build(3, {2, 2, 2}, {{0, 0, 2}}), hs::OutOfRangeError);
    EXPECT_THROW(hs::KPartiteHypergraph::build(3, {2, 2, 2}, {{0, 0, -1}}), hs::OutOfRangeError);
    EXPECT_THROW(hs::KPartiteHypergraph::build(3, {2, 2, 2}, {{0, 0, 0}, {0, 0, 0}}),
                 hs::DuplicateEdgeError);
}

TEST(Build, SortsEdgesAndAnswersMembership) {
    auto h = hs::KPartiteHypergraph::build(3, {2, 2, 2}, {{1, 1, 1}, {0, 0, 0}, {0, 1, 0}});
    std::vector<hs::Edge> want{{0, 0, 0}, {0, 1, 0}, {1, 1, 1}};
    EXPECT_EQ(h.edges(), want);
    EXPECT_TRUE(h.has_edge({0, 1, 0}));
    EXPECT_FALSE(h.has_edge({1, 0, 0}));
    EXPECT_EQ(h.edge_count(), 3);
    EXPECT_EQ(h.total_vertices(), 6);
}

TEST(Build, EmptyClassesAllowed) {
    auto h = hs::KPartiteHypergraph::build(3, {2, 0, 2}, {});
    EXPECT_EQ(h.edge_count(), 0);
    EXPECT_EQ(h.total_vertices(), 4);
}

TEST(VertexRef, Ordering) {
    hs::VertexRef a{0, 1}, b{1, 0};
    EXPECT_LT(a, b);
    EXPECT_EQ(a, (hs::VertexRef{0, 1}));
}

TEST(LegalSet, RejectsSameClassPairs) {
    EXPECT_THROW(hs::LegalSet({{0, 0}, {0, 1}}), hs::OverlapError);
    hs::LegalSet s({{2, 1}, {0, 0}, {0, 0}});  // duplicates collapse
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.vertices()[0], (hs::VertexRef{0, 0}));
    EXPECT_EQ(s.vertices()[1], (hs::VertexRef{2, 1}));
    EXPECT_FALSE(hs::is_legal_set({{0, 0}, {0, 1}}));
    EXPECT_TRUE(hs::is_legal_set({{0, 0}, {1, 1}, {0, 0}}));
}

TEST(Degree, CountsContainingEdges) {
    auto h = complete222();
    EXPECT_EQ(hs::degree(h, {{0, 0}}), 4);
    EXPECT_EQ(hs::degree(h, {{0, 0}, {1, 1}}), 2);
    EXPECT_EQ(hs::degree(h, {{0, 0}, {1, 1}, {2, 0}}), 1);
    EXPECT_EQ(hs::degree(h, {}), 8);
    EXPECT_EQ(hs::degree(h, {{0, 0}, {0, 1}}), 0);  // illegal set
    EXPECT_EQ(hs::degree(h, {{0, 5}}), 0);          // out of range
}

TEST(MinLDegree, CompleteGraphValues) {
    std::vector<hs::Edge> edges;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) edges.push_back({a, b, c});
    auto h = hs::KPartiteHypergraph::build(3, {3, 3, 3}, edges);
    EXPECT_EQ(hs::min_l_degree(h, 0), 27);
    EXPECT_EQ(hs::min_l_degree(h, 1), 9);
    EXPECT_EQ(hs::min_l_degree(h, 2), 3);
    EXPECT_EQ(hs::min_l_degree(h, 3), 1);
    EXPECT_THROW(hs::min_l_degree(h, 4), hs::BadLevelError);
    EXPECT_THROW(hs::min_l_degree(h, -1), hs::BadLevelError);
}

TEST(MinLDegree, SparseGraph) {
    auto h = hs::KPartiteHypergraph::build(3, {2, 2, 2}, {{0, 0, 0}});
    EXPECT_EQ(hs::min_l_degree(h, 1), 0);  // vertex (0,1) has degree 0
    EXPECT_EQ(hs::min_l_degree(h, 0), 1);
}

TEST(RemoveVertices, ReindexesAndFiltersEdges) {
    auto h = complete222();
    auto res = hs::remove_vertices(h, {{0, 0}});
    EXPECT_EQ(res.graph.class_sizes(), (std::vector<int>{1, 2, 2}));
    EXPECT_EQ(res.graph.edge_count(), 4);
    EXPECT_EQ(res.old_to_new[0], (std::vector<int>{-1, 0}));
    EXPECT_EQ(res.old_to_new[1], (std::vector<int>{0, 1}));
    EXPECT_TRUE(res.graph.has_edge({0, 0, 0}));  // was (1,0,0)
    EXPECT_THROW(hs::remove_vertices(h, {{0, 7}}), hs::OutOfRangeError);
}

TEST(RemoveVertices, MultipleClasses) {
    auto h = complete222();
    auto res = hs::remove_vertices(h, {{0, 1}, {1, 0}, {2, 1}});
    EXPECT_EQ(res.graph.class_sizes(), (std::vector<int>{1, 1, 1}));
    // surviving edge: old (0,1,0)
    EXPECT_EQ(res.graph.edge_count(), 1);
    EXPECT_TRUE(res.graph.has_edge({0, 0, 0}));
}

TEST(LinkGraph, CompleteGivesCompleteBipartite) {
    auto h = complete222();
    std::vector<hs::VertexRef> a{{1, 0}, {1, 1}};
    std::vector<hs::VertexRef> b{{2, 0}, {2, 1}};
    auto g = hs::link_graph(h, {0, 0}, a, b);
    EXPECT_EQ(g.edge_count(), 4);
    EXPECT_TRUE(g.has_edge(0, 0));
    EXPECT_TRUE(g.has_edge(1, 1));
}

TEST(LinkGraph, Validation) {
    auto h = complete222();
    auto h4 = hs::KPartiteHypergraph::build(4, {2, 2, 2, 2}, {});
    EXPECT_THROW(hs::link_graph(h4, {0, 0}, {}, {}), hs::BadArityError);
    EXPECT_THROW(hs::link_graph(h, {0, 5}, {}, {}), hs::OutOfRangeError);
    std::vector<hs::VertexRef> a{{1, 0}};
    EXPECT_THROW(hs::link_graph(h, {0, 0}, a, a), hs::OverlapError);
    std::vector<hs::VertexRef> with_x{{0, 0}};
    EXPECT_THROW(hs::link_graph(h, {0, 0}, with_x, a), hs::OverlapError);
}

TEST(LinkGraph, MixedClassSides) {
    // A holds class-1 and class-2 vertices; pairs inside the same class or
    // colliding with x's class contribute nothing.
    auto h = complete222();
    std::vector<hs::VertexRef> a{{1, 0}, {2, 0}};
    std::vector<hs::VertexRef> b{{1, 1}, {2, 1}};
    auto g = hs::link_graph(h, {0, 1}, a, b);
    EXPECT_TRUE(g.has_edge(0, 1));   // {(1,0),(2,1),x}
    EXPECT_TRUE(g.has_edge(1, 0));   // {(2,0),(1,1),x}
    EXPECT_FALSE(g.has_edge(0, 0));  // both class 1
    EXPECT_EQ(g.edge_count(), 2);
}

TEST(EdgesBetween, CountsIncidences) {
    auto h = complete222();
    EXPECT_EQ(hs::edges_between(h, {{0, 0}}, {{1, 0}}), 2);
    EXPECT_EQ(hs::edges_between(h, {{0, 0}, {0, 1}}, {{1, 0}, {1, 1}}), 8);
    EXPECT_EQ(hs::edges_between(h, {}, {{1, 0}}), 0);
}

TEST(MatchingPredicates, Basics) {
    auto h = complete222();
    hs::Matching m{{{0, 0, 0}, {1, 1, 1}}};
    EXPECT_TRUE(hs::is_matching(h, m));
    EXPECT_TRUE(hs::is_perfect_matching(h, m));
    hs::Matching overlap{{{0, 0, 0}, {0, 1, 1}}};
    EXPECT_FALSE(hs::is_matching(h, overlap));
    hs::Matching foreign{{{0, 0, 0}}};
    auto sparse = hs::KPartiteHypergraph::build(3, {2, 2, 2}, {{1, 1, 1}});
    EXPECT_FALSE(hs::is_matching(sparse, foreign));
    EXPECT_FALSE(hs::is_perfect_matching(h, hs::Matching{{{0, 0, 0}}}));
}

TEST(CoverPredicate, Basics) {
    auto h = complete222();
    EXPECT_TRUE(hs::is_vertex_cover(h, {{{0, 0}, {0, 1}}}));
    EXPECT_FALSE(hs::is_vertex_cover(h, {{{0, 0}}}));
    EXPECT_TRUE(hs::is_vertex_cover(hs::KPartiteHypergraph::build(3, {2, 2, 2}, {}), {{}}));
}

TEST(Bipartite, BuildAndValidate) {
    hs::BipartiteGraph g(2, 3);
    g.add_edge(0, 2);
    g.add_edge(0, 0);
    g.add_edge(1, 1);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_TRUE(g.has_edge(0, 2));
    EXPECT_FALSE(g.has_edge(1, 2));
    std::vector<std::pair<int, int>> want{{0, 0}, {0, 2}, {1, 1}};
    EXPECT_EQ(g.edges(), want);
    EXPECT_THROW(g.add_edge(0, 0), hs::DuplicateEdgeError);
    EXPECT_THROW(g.add_edge(2, 0), hs::OutOfRangeError);
    EXPECT_THROW(g.add_edge(0, 3), hs::OutOfRangeError);
    EXPECT_THROW(hs::BipartiteGraph(-1, 2), hs::BadParamsError);
}

TEST(Bipartite, AdjacencyAndEquality) {
    auto g = hs::BipartiteGraph::build(2, 2, {{1, 0}, {0, 1}, {0, 0}});
    auto adj = g.left_adjacency();
    ASSERT_EQ(adj.size(), 2u);
    EXPECT_EQ(adj[0], (std::vector<int>{0, 1}));
    EXPECT_EQ(adj[1], (std::vector<int>{0}));
    auto same = hs::BipartiteGraph::build(2, 2, {{0, 0}, {0, 1}, {1, 0}});
    EXPECT_TRUE(g == same);
}

}  // namespace
