#ifndef HYPERSTAB_CONSTRUCTIONS_HPP
#define HYPERSTAB_CONSTRUCTIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "hyperstab/bipartite.hpp"
#include "hyperstab/core.hpp"
#include "hyperstab/errors.hpp"
#include "hyperstab/rng.hpp"

namespace hyperstab {

namespace detail {

inline void for_each_tuple(const std::vector<int>& sizes, const std::function<void(const Edge&)>& fn) {
    Edge t(sizes.size(), 0);
    for (int s : sizes)
        if (s <= 0) return;  // no tuples at all
    while (true) {
        fn(t);
        std::size_t c = sizes.size();
        while (c > 0) {
            --c;
            if (++t[c] < sizes[c]) break;
            t[c] = 0;
            if (c == 0) return;
        }
    }
}

inline std::vector<Edge> all_tuples(const std::vector<int>& sizes) {
    std::vector<Edge> out;
    for_each_tuple(sizes, [&](const Edge& t) { out.push_back(t); });
    return out;
}

}  // namespace detail

// The extremal graph with matching number m and cover number m + 1 whose edge
// count sits one below the stability threshold.  Layout: the distinguished
// (k-1)-set W1 occupies positions 0..m-2 of class 0; the special vertex v1 is
// position m-1 of class 0; the special vertices v2..vk are position 0 of
// classes 1..k-1.  An edge qualifies if it meets W1, or contains all of
// v2..vk, or contains v1 and at least one of v2..vk.
inline KPartiteHypergraph extremal_construction(int k, int n, int m) {
    if (k < 3) throw BadParamsError("extremal construction needs k >= 3");
    if (m < 1 || n < m + 1) throw BadParamsError("extremal construction needs n >= m+1 >= 2");
    std::vector<int> sizes(static_cast<std::size_t>(k), n);
    std::vector<Edge> edges;
    detail::for_each_tuple(sizes, [&](const Edge& t) {
        bool meets_w1 = t[0] < m - 1;
        bool tail_all_zero = true, tail_any_zero = false;
        for (int c = 1; c < k; ++c) {
            if (t[static_cast<std::size_t>(c)] == 0)
                tail_any_zero = true;
            else
                tail_all_zero = false;
        }
        if (meets_w1 || tail_all_zero || (t[0] == m - 1 && tail_any_zero)) edges.push_back(t);
    });
    return KPartiteHypergraph::build(k, std::move(sizes), std::move(edges));
}

// Closed-form edge count of the construction above.
inline long extremal_edge_count(int k, int n, int m) {
    if (k < 3) throw BadParamsError("extremal construction needs k >= 3");
    if (m < 1 || n < m + 1) throw BadParamsError("extremal construction needs n >= m+1 >= 2");
    auto pw = [](long b, int e) {
        long r = 1;
        for (int i = 0; i < e; ++i) r *= b;
        return r;
    };
    return (m - 1) * pw(n, k - 1) + (pw(n, k - 1) - pw(n - 1, k - 1)) + n - m;
}

inline KPartiteHypergraph complete(int k, std::vector<int> sizes) {
    for (int s : sizes)
        if (s <= 0) throw BadParamsError("complete graph needs positive sizes");
    std::vector<Edge> edges = detail::all_tuples(sizes);
    return KPartiteHypergraph::build(k, std::move(sizes), std::move(edges));
}

// Decomposition of the complete equal-sized graph into n^{k-1} edge-disjoint
// perfect matchings: the matching for offsets (s_2,..,s_k) consists of the
// edges (i, i+s_2 mod n, ..., i+s_k mod n).
inline std::vector<Matching> perfect_matching_decomposition(int k, int n) {
    if (k < 2 || n < 1) throw BadParamsError("decomposition needs k >= 2, n >= 1");
    std::vector<int> offset_sizes(static_cast<std::size_t>(k - 1), n);
    std::vector<Matching> out;
    detail::for_each_tuple(offset_sizes, [&](const Edge& s) {
        Matching m;
        for (int i = 0; i < n; ++i) {
            Edge e(static_cast<std::size_t>(k));
            e[0] = i;
            for (int c = 1; c < k; ++c)
                e[static_cast<std::size_t>(c)] = (i + s[static_cast<std::size_t>(c - 1)]) % n;
            m.edges.push_back(std::move(e));
        }
        out.push_back(std::move(m));
    });
    return out;
}

// Maximal intersecting family sitting one edge below the stability threshold
// for nu = 1: all legal triples containing at least two of the three anchor
// vertices (position 0 of each class).  e = n1+n2+n3-2, nu = 1, tau = 2.
inline KPartiteHypergraph intersecting_tight_family(int n1, int n2, int n3) {
    if (n1 < 2 || n2 < 2 || n3 < 2) throw BadParamsError("tight family needs sizes >= 2");
    std::vector<int> sizes{n1, n2, n3};
    std::vector<Edge> edges;
    detail::for_each_tuple(sizes, [&](const Edge& t) {
        int zeros = (t[0] == 0) + (t[1] == 0) + (t[2] == 0);
        if (zeros >= 2) edges.push_back(t);
    });
    return KPartiteHypergraph::build(3, std::move(sizes), std::move(edges));
}

// m copies of the n-by-n bipartite graph whose edges all touch left vertices
// 0..m-2.  Each member has (m-1)n edges; the union has matching number m-1,
// so no rainbow m-matching exists.
inline std::vector<BipartiteGraph> rainbow_tight_family(int n, int m) {
    if (m < 1 || n < m) throw BadParamsError("rainbow tight family needs n >= m >= 1");
    BipartiteGraph g(n, n);
    for (int l = 0; l < m - 1; ++l)
        for (int r = 0; r < n; ++r) g.add_edge(l, r);
    return std::vector<BipartiteGraph>(static_cast<std::size_t>(m), g);
}

// Uniform random e-subset of all legal tuples (partial Fisher-Yates).
inline KPartiteHypergraph random_hypergraph(int k, std::vector<int> sizes, long e, std::uint64_t seed) {
    if (k < 2 || static_cast<int>(sizes.size()) != k) throw BadParamsError("bad k or sizes");
    std::vector<Edge> pool = detail::all_tuples(sizes);
    if (e < 0 || e > static_cast<long>(pool.size()))
        throw InfeasibleError("requested " + std::to_string(e) + " edges from a universe of " +
                              std::to_string(pool.size()));
    Rng rng(seed);
    for (long i = 0; i < e; ++i) {
        std::uint64_t j = i + rng.below(pool.size() - static_cast<std::size_t>(i));
        std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(e));
    return KPartiteHypergraph::build(k, std::move(sizes), std::move(pool));
}

// Iterative repair: while some vertex has degree < delta, add a random
// missing edge through the first deficient vertex.  Overshoots the minimal
// edge count slightly; callers filter on realized degrees.
inline KPartiteHypergraph random_min_degree(int k, int n, int delta, std::uint64_t seed) {
    if (k < 2 || n < 1) throw BadParamsError("bad k or n");
    long universe_per_vertex = 1;
    for (int i = 0; i < k - 1; ++i) universe_per_vertex *= n;
    if (delta < 0 || delta > universe_per_vertex)
        throw InfeasibleError("degree floor " + std::to_string(delta) + " exceeds " +
                              std::to_string(universe_per_vertex));
    std::vector<int> sizes(static_cast<std::size_t>(k), n);
    std::vector<Edge> pool = detail::all_tuples(sizes);
    std::vector<char> taken(pool.size(), 0);
    std::vector<std::vector<int>> deg(static_cast<std::size_t>(k),
                                      std::vector<int>(static_cast<std::size_t>(n), 0));
    Rng rng(seed);
    while (true) {
        int cls = -1, pos = -1;
        for (int c = 0; c < k && cls < 0; ++c)
            for (int p = 0; p < n; ++p)
                if (deg[static_cast<std::size_t>(c)][static_cast<std::size_t>(p)] < delta) {
                    cls = c;
                    pos = p;
                    break;
                }
        if (cls < 0) break;
        std::vector<std::size_t> candidates;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (!taken[i] && pool[i][static_cast<std::size_t>(cls)] == pos) candidates.push_back(i);
        std::size_t pick = candidates[rng.below(candidates.size())];
        taken[pick] = 1;
        for (int c = 0; c < k; ++c)
            ++deg[static_cast<std::size_t>(c)][static_cast<std::size_t>(pool[pick][static_cast<std::size_t>(c)])];
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (taken[i]) edges.push_back(pool[i]);
    return KPartiteHypergraph::build(k, std::move(sizes), std::move(edges));
}

}  // namespace hyperstab

#endif  // HYPERSTAB_CONSTRUCTIONS_HPP
