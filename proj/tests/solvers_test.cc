#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "hyperstab/constructions.hpp"
#include "hyperstab/core.hpp"
#include "hyperstab/errors.hpp"
#include "hyperstab/rng.hpp"
#include "hyperstab/solvers.hpp"

namespace hs = hyperstab;

namespace {

TEST(MaxMatching, CompleteGraphs) {
    auto h2 = hs::complete(3, {2, 2, 2});
    auto m2 = hs::max_matching(h2);
    EXPECT_EQ(static_cast<int>(m2.edges.size()), 2);
    EXPECT_TRUE(hs::is_perfect_matching(h2, m2));

    auto h3 = hs::complete(3, {3, 3, 3});
    auto m3 = hs::max_matching(h3);
    ASSERT_EQ(m3.edges.size(), 3u);
    // Take-first search lands on the diagonal, the lexicographically least
    // maximum matching.
    EXPECT_EQ(m3.edges[0], (hs::Edge{0, 0, 0}));
    EXPECT_EQ(m3.edges[1], (hs::Edge{1, 1, 1}));
    EXPECT_EQ(m3.edges[2], (hs::Edge{2, 2, 2}));
}

TEST(MaxMatching, EmptyAndSingle) {
    auto empty = hs::KPartiteHypergraph::build(3, {2, 2, 2}, {});
    EXPECT_TRUE(hs::max_matching(empty).edges.empty());
    auto one = hs::KPartiteHypergraph::build(3, {2, 2, 2}, {{0, 1, 0}});
    auto m = hs::max_matching(one);
    ASSERT_EQ(m.edges.size(), 1u);
    EXPECT_EQ(m.edges[0], (hs::Edge{0, 1, 0}));
}

TEST(MaxMatching, ExtremalConstructionValue) {
    auto h = hs::extremal_construction(3, 5, 2);
    auto m = hs::max_matching(h);
    EXPECT_EQ(static_cast<int>(m.edges.size()), 2);
    EXPECT_TRUE(hs::is_matching(h, m));
}

TEST(MaxMatching, BudgetThrows) {
    auto h = hs::complete(3, {4, 4, 4});
    EXPECT_THROW(hs::max_matching(h, 3), hs::BudgetError);
    try {
        hs::max_matching(h, 3);
        FAIL() << "expected BudgetError";
    } catch (const hs::BudgetError& err) {
        EXPECT_NE(std::string(err.what()).find("lower bound"), std::string::npos);
    }
}

TEST(MinVertexCover, KnownValues) {
    auto empty = hs::KPartiteHypergraph::build(3, {2, 2, 2}, {});
    EXPECT_TRUE(hs::min_vertex_cover(empty).vertices.empty());

    auto one = hs::KPartiteHypergraph::build(3, {2, 2, 2}, {{0, 1, 0}});
    auto c1 = hs::min_vertex_cover(one);
    ASSERT_EQ(c1.vertices.size(), 1u);
    EXPECT_TRUE(hs::is_vertex_cover(one, c1));

    auto h222 = hs::complete(3, {2, 2, 2});
    auto c2 = hs::min_vertex_cover(h222);
    EXPECT_EQ(c2.vertices.size(), 2u);
    EXPECT_TRUE(hs::is_vertex_cover(h222, c2));

    auto ext = hs::extremal_construction(3, 5, 2);
    auto c3 = hs::min_vertex_cover(ext);
    EXPECT_EQ(c3.vertices.size(), 3u);
    EXPECT_TRUE(hs::is_vertex_cover(ext, c3));
}

TEST(MinVertexCover, BudgetThrows) {
    auto h = hs::complete(3, {4, 4, 4});
    EXPECT_THROW(hs::min_vertex_cover(h, 2), hs::BudgetError);
}

TEST(BruteOracles, SmallKnownValues) {
    auto h222 = hs::complete(3, {2, 2, 2});
    EXPECT_EQ(hs::brute_nu(h222), 2);
    EXPECT_EQ(hs::brute_tau(h222), 2);

    auto ext32 = hs::extremal_construction(3, 3, 2);
    EXPECT_EQ(hs::brute_nu(ext32), 2);
    EXPECT_EQ(hs::brute_tau(ext32), 3);

    auto empty = hs::KPartiteHypergraph::build(3, {1, 1, 1}, {});
    EXPECT_EQ(hs::brute_nu(empty), 0);
    EXPECT_EQ(hs::brute_tau(empty), 0);
}

TEST(BruteOracles, SizeLimits) {
    auto h27 = hs::complete(3, {3, 3, 3});  // 27 edges, 9 vertices
    EXPECT_THROW(hs::brute_nu(h27), hs::TooLargeError);
    EXPECT_EQ(hs::brute_tau(h27), 3);
    auto wide = hs::complete(3, {7, 1, 3});  // 21 edges, 11... vertices = 7+1+3 = 11
    EXPECT_EQ(hs::brute_nu(wide), 1);
    auto tall = hs::KPartiteHypergraph::build(3, {8, 8, 8}, {{0, 0, 0}});
    EXPECT_THROW(hs::brute_tau(tall), hs::TooLargeError);
}

TEST(Oracles, AgreeWithSearchOnRandoms) {
    hs::Rng rng(0xfeedbeefULL);
    for (int t = 0; t < 60; ++t) {
        int e = 1 + static_cast<int>(rng.below(12));
        auto h = hs::random_hypergraph(3, {3, 3, 3}, e, rng.next());
        int nu = hs::brute_nu(h);
        int tau = hs::brute_tau(h);
        auto m = hs::max_matching(h);
        auto c = hs::min_vertex_cover(h);
        EXPECT_EQ(static_cast<int>(m.edges.size()), nu);
        EXPECT_EQ(static_cast<int>(c.vertices.size()), tau);
        EXPECT_TRUE(hs::is_matching(h, m));
        EXPECT_TRUE(hs::is_vertex_cover(h, c));
        EXPECT_LE(nu, tau);
        EXPECT_LE(tau, 3 * nu);
    }
}

TEST(BipartiteMatching, KnownValues) {
    auto g = hs::BipartiteGraph::build(3, 3,
                                       {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}});
    auto m = hs::bipartite_max_matching(g);
    EXPECT_EQ(m.size(), 2);
    for (auto [l, r] : m.pairs) EXPECT_TRUE(g.has_edge(l, r));

    auto perfect = hs::BipartiteGraph::build(2, 2, {{0, 0}, {1, 1}});
    EXPECT_EQ(hs::bipartite_max_matching(perfect).size(), 2);

    auto none = hs::BipartiteGraph::build(2, 2, {});
    EXPECT_EQ(hs::bipartite_max_matching(none).size(), 0);

    auto star = hs::BipartiteGraph::build(3, 1, {{0, 0}, {1, 0}, {2, 0}});
    EXPECT_EQ(hs::bipartite_max_matching(star).size(), 1);
}

TEST(BipartiteCover, MatchesMatchingSize) {
    hs::Rng rng(0x5151ULL);
    for (int t = 0; t < 80; ++t) {
        int nl = 1 + static_cast<int>(rng.below(5));
        int nr = 1 + static_cast<int>(rng.below(5));
        hs::BipartiteGraph g(nl, nr);
        for (int l = 0; l < nl; ++l)
            for (int r = 0; r < nr; ++r)
                if (rng.below(2) == 0 && !g.has_edge(l, r)) g.add_edge(l, r);
        auto m = hs::bipartite_max_matching(g);
        auto c = hs::bipartite_min_cover(g);
        EXPECT_EQ(m.size(), c.size());
        for (auto [l, r] : g.edges()) {
            bool covered = std::count(c.left.begin(), c.left.end(), l) ||
                           std::count(c.right.begin(), c.right.end(), r);
            EXPECT_TRUE(covered);
        }
    }
}

TEST(BipartiteCover, StarExample) {
    auto star = hs::BipartiteGraph::build(3, 1, {{0, 0}, {1, 0}, {2, 0}});
    auto c = hs::bipartite_min_cover(star);
    EXPECT_EQ(c.size(), 1);
    ASSERT_EQ(c.right.size(), 1u);
    EXPECT_EQ(c.right[0], 0);
}

TEST(Rainbow, CompleteFamilyHasSystem) {
    std::vector<hs::BipartiteGraph> fam;
    for (int i = 0; i < 3; ++i)
        fam.push_back(hs::BipartiteGraph::build(
            3, 3, {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}));
    auto r = hs::rainbow_matching(fam);
    ASSERT_TRUE(r.has_value());
    ASSERT_EQ(r->pairs.size(), 3u);
    std::vector<int> lefts, rights;
    for (int i = 0; i < 3; ++i) {
        auto [l, rr] = r->pairs[i];
        EXPECT_TRUE(fam[i].has_edge(l, rr));
        lefts.push_back(l);
        rights.push_back(rr);
    }
    std::sort(lefts.begin(), lefts.end());
    std::sort(rights.begin(), rights.end());
    EXPECT_EQ(std::unique(lefts.begin(), lefts.end()), lefts.end());
    EXPECT_EQ(std::unique(rights.begin(), rights.end()), rights.end());
}

TEST(Rainbow, BlockedFamilies) {
    // Two graphs sharing the single edge (0,0): no disjoint transversal.
    auto g = hs::BipartiteGraph::build(2, 2, {{0, 0}});
    EXPECT_FALSE(hs::rainbow_matching({g, g}).has_value());

    // Star-blocked tight pair at sum = 2n for n = 2: G1 = {(0,0)}, G2 = all
    // edges through left 0 or right 0 (3 edges). e1 + e2 = 4 = 2n, no rainbow.
    auto g1 = hs::BipartiteGraph::build(2, 2, {{0, 0}});
    auto g2 = hs::BipartiteGraph::build(2, 2, {{0, 0}, {0, 1}, {1, 0}});
    EXPECT_FALSE(hs::rainbow_matching({g1, g2}).has_value());
}

TEST(Rainbow, EmptyAndErrors) {
    auto r = hs::rainbow_matching({});
    ASSERT_TRUE(r.has_value());
    EXPECT_TRUE(r->pairs.empty());

    auto a = hs::BipartiteGraph::build(2, 2, {{0, 0}});
    auto b = hs::BipartiteGraph::build(2, 3, {{0, 0}});
    EXPECT_THROW(hs::rainbow_matching({a, b}), hs::BadParamsError);

    auto none = hs::BipartiteGraph::build(2, 2, {});
    EXPECT_FALSE(hs::rainbow_matching({a, none}).has_value());
}

TEST(Rainbow, PairsAlignWithInputOrder) {
    // Graph 0 has many edges, graph 1 only (1,1); sparsest-first internal
    // ordering must not leak into the reported indices.
    auto big = hs::BipartiteGraph::build(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto small = hs::BipartiteGraph::build(2, 2, {{1, 1}});
    auto r = hs::rainbow_matching({big, small});
    ASSERT_TRUE(r.has_value());
    EXPECT_EQ(r->pairs[1], (std::pair<int, int>{1, 1}));
    EXPECT_EQ(r->pairs[0], (std::pair<int, int>{0, 0}));
}

TEST(Rainbow, AgreesWithBruteForceOnRandoms) {
    hs::Rng rng(0xabcdULL);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng.below(2));
        std::vector<hs::BipartiteGraph> fam;
        std::vector<std::vector<std::pair<int, int>>> lists;
        for (int i = 0; i < n; ++i) {
            hs::BipartiteGraph g(n, n);
            std::vector<std::pair<int, int>> es;
            for (int l = 0; l < n; ++l)
                for (int r = 0; r < n; ++r)
                    if (rng.below(3) == 0) {
                        g.add_edge(l, r);
                        es.push_back({l, r});
                    }
            fam.push_back(g);
            lists.push_back(es);
        }
        // brute force over cartesian product
        bool exists = false;
        std::vector<int> pick(n, 0);
        std::function<void(int, int, int)> go = [&](int i, int lmask, int rmask) {
            if (exists) return;
            if (i == n) {
                exists = true;
                return;
            }
            for (auto [l, r] : lists[i]) {
                if ((lmask >> l & 1) || (rmask >> r & 1)) continue;
                go(i + 1, lmask | (1 << l), rmask | (1 << r));
            }
        };
        go(0, 0, 0);
        auto got = hs::rainbow_matching(fam);
        EXPECT_EQ(got.has_value(), exists);
        if (got) {
            std::vector<int> ls, rs;
            for (int i = 0; i < n; ++i) {
                EXPECT_TRUE(fam[i].has_edge(got->pairs[i].first, got->pairs[i].second));
                ls.push_back(got->pairs[i].first);
                rs.push_back(got->pairs[i].second);
            }
            std::sort(ls.begin(), ls.end());
            std::sort(rs.begin(), rs.end());
            EXPECT_EQ(std::unique(ls.begin(), ls.end()), ls.end());
            EXPECT_EQ(std::unique(rs.begin(), rs.end()), rs.end());
        }
    }
}

}  // namespace
