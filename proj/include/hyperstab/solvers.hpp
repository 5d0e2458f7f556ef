#ifndef HYPERSTAB_SOLVERS_HPP
#define HYPERSTAB_SOLVERS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperstab/bipartite.hpp"
#include "hyperstab/core.hpp"
#include "hyperstab/errors.hpp"

namespace hyperstab {

namespace detail {

struct MatchingSearch {
    const std::vector<Edge>& edges;
    int k;
    std::vector<std::vector<char>> used;  // used[cls][pos]
    std::vector<int> free_count;          // free vertices per class
    std::vector<int> current;             // indices of taken edges, ascending
    std::vector<int> best;
    long nodes = 0;
    long budget;  // 0 = unlimited

    MatchingSearch(const KPartiteHypergraph& h, long node_budget)
        : edges(h.edges()), k(h.k()), budget(node_budget) {
        for (int c = 0; c < k; ++c) {
            int n = h.class_sizes()[static_cast<std::size_t>(c)];
            used.emplace_back(static_cast<std::size_t>(n), 0);
            free_count.push_back(n);
        }
    }

    bool compatible(const Edge& e) const {
        for (int c = 0; c < k; ++c)
            if (used[static_cast<std::size_t>(c)][static_cast<std::size_t>(e[static_cast<std::size_t>(c)])])
                return false;
        return true;
    }

    void mark(const Edge& e, char val) {
        for (int c = 0; c < k; ++c) {
            used[static_cast<std::size_t>(c)][static_cast<std::size_t>(e[static_cast<std::size_t>(c)])] = val;
            free_count[static_cast<std::size_t>(c)] += val ? -1 : 1;
        }
    }

    // Take-first DFS, recording on strict improvement only: the first matching
    // reaching a new size is the lexicographically least of that size, so the
    // final certificate is the lex-least maximum matching.
    void dfs(std::size_t i) {
        if (budget > 0 && ++nodes > budget)
            throw BudgetError("matching search budget exhausted; best size so far " +
                              std::to_string(best.size()) + " is only a lower bound");
        if (current.size() > best.size()) best = current;
        if (i == edges.size()) return;
        int bound = static_cast<int>(edges.size() - i);
        for (int c = 0; c < k; ++c) bound = std::min(bound, free_count[static_cast<std::size_t>(c)]);
        if (current.size() + static_cast<std::size_t>(bound) <= best.size()) return;
        if (compatible(edges[i])) {
            mark(edges[i], 1);
            current.push_back(static_cast<int>(i));
            dfs(i + 1);
            current.pop_back();
            mark(edges[i], 0);
        }
        dfs(i + 1);
    }
};

}  // namespace detail

// Exact maximum matching by branch-and-bound; returns the lexicographically
// least maximum matching.  Throws Budget if the optional node cap is hit.
inline Matching max_matching(const KPartiteHypergraph& h, long node_budget = 0) {
    detail::MatchingSearch s(h, node_budget);
    s.dfs(0);
    Matching m;
    for (int i : s.best) m.edges.push_back(h.edges()[static_cast<std::size_t>(i)]);
    return m;
}

namespace detail {

struct CoverSearch {
    const KPartiteHypergraph& h;
    int k;
    std::vector<std::vector<char>> chosen;  // chosen[cls][pos]
    std::vector<VertexRef> current;
    std::vector<VertexRef> best;
    long nodes = 0;
    long budget;

    CoverSearch(const KPartiteHypergraph& g, long node_budget) : h(g), k(g.k()), budget(node_budget) {
        for (int c = 0; c < k; ++c)
            chosen.emplace_back(static_cast<std::size_t>(h.class_sizes()[static_cast<std::size_t>(c)]), 0);
    }

    bool covered(const Edge& e) const {
        for (int c = 0; c < k; ++c)
            if (chosen[static_cast<std::size_t>(c)][static_cast<std::size_t>(e[static_cast<std::size_t>(c)])])
                return true;
        return false;
    }

    // Greedy disjoint set of uncovered edges: each needs its own cover vertex.
    int lower_bound() const {
        std::vector<const Edge*> taken;
        for (const Edge& e : h.edges()) {
            if (covered(e)) continue;
            bool ok = true;
            for (const Edge* t : taken)
                if (!edges_disjoint(*t, e)) {
                    ok = false;
                    break;
                }
            if (ok) taken.push_back(&e);
        }
        return static_cast<int>(taken.size());
    }

    void dfs() {
        if (budget > 0 && ++nodes > budget)
            throw BudgetError("cover search budget exhausted; best size so far " +
                              std::to_string(best.size()) + " is only an upper bound");
        const Edge* open = nullptr;
        for (const Edge& e : h.edges())
            if (!covered(e)) {
                open = &e;
                break;
            }
        if (!open) {
            if (current.size() < best.size()) best = current;
            return;
        }
        if (current.size() + static_cast<std::size_t>(lower_bound()) >= best.size()) return;
        for (int c = 0; c < k; ++c) {
            VertexRef v{c, (*open)[static_cast<std::size_t>(c)]};
            chosen[static_cast<std::size_t>(c)][static_cast<std::size_t>(v.pos)] = 1;
            current.push_back(v);
            dfs();
            current.pop_back();
            chosen[static_cast<std::size_t>(c)][static_cast<std::size_t>(v.pos)] = 0;
        }
    }
};

}  // namespace detail

// Exact minimum vertex cover: branch on the k vertices of the first uncovered
// edge; incumbent starts from V(maximum matching), which is a cover of size
// k * nu.  Deterministic certificate (first optimum under the fixed order).
inline VertexCover min_vertex_cover(const KPartiteHypergraph& h, long node_budget = 0) {
    detail::CoverSearch s(h, node_budget);
    Matching m = max_matching(h, node_budget);
    for (const Edge& e : m.edges)
        for (int c = 0; c < h.k(); ++c) s.best.push_back({c, e[static_cast<std::size_t>(c)]});
    s.dfs();
    VertexCover cover;
    cover.vertices = dedupe_vertices(s.best);
    return cover;
}

namespace detail {

inline void enumerate_matchings(const std::vector<Edge>& edges, std::vector<int>& stack, int last,
                                int& best) {
    best = std::max(best, static_cast<int>(stack.size()));
    for (int j = last + 1; j < static_cast<int>(edges.size()); ++j) {
        bool ok = true;
        for (int t : stack)
            if (!edges_disjoint(edges[static_cast<std::size_t>(t)], edges[static_cast<std::size_t>(j)])) {
                ok = false;
                break;
            }
        if (ok) {
            stack.push_back(j);
            enumerate_matchings(edges, stack, j, best);
            stack.pop_back();
        }
    }
}

}  // namespace detail

// Oracle: enumerate every matching once (no pruning).  Enforced small limits.
inline int brute_nu(const KPartiteHypergraph& h) {
    if (h.edge_count() > 24) throw TooLargeError("brute_nu limited to 24 edges");
    std::vector<int> stack;
    int best = 0;
    detail::enumerate_matchings(h.edges(), stack, -1, best);
    return best;
}

namespace detail {

inline bool cover_subset_search(const std::vector<std::uint32_t>& edge_masks, int total, int size,
                                int first, std::uint32_t mask) {
    if (size == 0) {
        for (std::uint32_t em : edge_masks)
            if ((em & mask) == 0) return false;
        return true;
    }
    for (int v = first; v <= total - size; ++v)
        if (cover_subset_search(edge_masks, total, size - 1, v + 1, mask | (1u << v)))
            return true;
    return false;
}

}  // namespace detail

// Oracle: smallest s such that some s-subset of vertices covers all edges.
inline int brute_tau(const KPartiteHypergraph& h) {
    int total = h.total_vertices();
    if (total > 18) throw TooLargeError("brute_tau limited to 18 vertices");
    std::vector<int> offset(static_cast<std::size_t>(h.k()), 0);
    for (int c = 1; c < h.k(); ++c)
        offset[static_cast<std::size_t>(c)] =
            offset[static_cast<std::size_t>(c - 1)] + h.class_sizes()[static_cast<std::size_t>(c - 1)];
    std::vector<std::uint32_t> edge_masks;
    for (const Edge& e : h.edges()) {
        std::uint32_t m = 0;
        for (int c = 0; c < h.k(); ++c)
            m |= 1u << (offset[static_cast<std::size_t>(c)] + e[static_cast<std::size_t>(c)]);
        edge_masks.push_back(m);
    }
    for (int s = 0; s <= total; ++s)
        if (detail::cover_subset_search(edge_masks, total, s, 0, 0)) return s;
    return total;
}

struct BipartiteMatching {
    std::vector<std::pair<int, int>> pairs;  // (left, right), sorted by left
    std::size_t size() const { return pairs.size(); }
};

struct BipartiteCover {
    std::vector<int> left;
    std::vector<int> right;
    std::size_t size() const { return left.size() + right.size(); }
};

namespace detail {

struct Kuhn {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match_left;   // left -> right or -1
    std::vector<int> match_right;  // right -> left or -1
    std::vector<char> seen;

    Kuhn(const std::vector<std::vector<int>>& a, int left, int right)
        : adj(a), match_left(static_cast<std::size_t>(left), -1),
          match_right(static_cast<std::size_t>(right), -1), seen(static_cast<std::size_t>(right), 0) {}

    bool augment(int u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (seen[static_cast<std::size_t>(v)]) continue;
            seen[static_cast<std::size_t>(v)] = 1;
            if (match_right[static_cast<std::size_t>(v)] < 0 ||
                augment(match_right[static_cast<std::size_t>(v)])) {
                match_left[static_cast<std::size_t>(u)] = v;
                match_right[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    }

    void run() {
        for (std::size_t u = 0; u < match_left.size(); ++u) {
            std::fill(seen.begin(), seen.end(), 0);
            augment(static_cast<int>(u));
        }
    }
};

}  // namespace detail

// Maximum bipartite matching via augmenting paths (left vertices in order).
inline BipartiteMatching bipartite_max_matching(const BipartiteGraph& g) {
    auto adj = g.left_adjacency();
    detail::Kuhn kuhn(adj, g.left_size(), g.right_size());
    kuhn.run();
    BipartiteMatching m;
    for (int u = 0; u < g.left_size(); ++u)
        if (kuhn.match_left[static_cast<std::size_t>(u)] >= 0)
            m.pairs.emplace_back(u, kuhn.match_left[static_cast<std::size_t>(u)]);
    return m;
}

// Minimum cover from the alternating-reachability partition: run the matching,
// mark everything alternating-reachable from unmatched left vertices, then
// take unreached left plus reached right.
inline BipartiteCover bipartite_min_cover(const BipartiteGraph& g) {
    auto adj = g.left_adjacency();
    detail::Kuhn kuhn(adj, g.left_size(), g.right_size());
    kuhn.run();

    std::vector<char> left_reached(static_cast<std::size_t>(g.left_size()), 0);
    std::vector<char> right_reached(static_cast<std::size_t>(g.right_size()), 0);
    std::vector<int> queue;
    for (int u = 0; u < g.left_size(); ++u)
        if (kuhn.match_left[static_cast<std::size_t>(u)] < 0) {
            left_reached[static_cast<std::size_t>(u)] = 1;
            queue.push_back(u);
        }
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (right_reached[static_cast<std::size_t>(v)]) continue;
            right_reached[static_cast<std::size_t>(v)] = 1;
            int w = kuhn.match_right[static_cast<std::size_t>(v)];
            if (w >= 0 && !left_reached[static_cast<std::size_t>(w)]) {
                left_reached[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
        }
    }

    BipartiteCover cover;
    for (int u = 0; u < g.left_size(); ++u)
        if (!left_reached[static_cast<std::size_t>(u)]) cover.left.push_back(u);
    for (int v = 0; v < g.right_size(); ++v)
        if (right_reached[static_cast<std::size_t>(v)]) cover.right.push_back(v);
    return cover;
}

// One edge chosen from each family member, pairwise vertex-disjoint.
// pairs[i] belongs to family[i] (original order).
struct RainbowAssignment {
    std::vector<std::pair<int, int>> pairs;
};

namespace detail {

inline bool rainbow_dfs(const std::vector<const BipartiteGraph*>& fam, std::size_t i,
                        std::vector<char>& left_used, std::vector<char>& right_used,
                        std::vector<std::pair<int, int>>& picked) {
    if (i == fam.size()) return true;
    for (auto [l, r] : fam[i]->edges()) {
        if (left_used[static_cast<std::size_t>(l)] || right_used[static_cast<std::size_t>(r)]) continue;
        left_used[static_cast<std::size_t>(l)] = 1;
        right_used[static_cast<std::size_t>(r)] = 1;
        picked.emplace_back(l, r);
        if (rainbow_dfs(fam, i + 1, left_used, right_used, picked)) return true;
        picked.pop_back();
        left_used[static_cast<std::size_t>(l)] = 0;
        right_used[static_cast<std::size_t>(r)] = 0;
    }
    return false;
}

}  // namespace detail

// Full rainbow matching for a family of bipartite graphs on common sides,
// or nullopt.  Backtracking visits families in ascending edge count
// (fail-first); the result reports edges in the original family order.
inline std::optional<RainbowAssignment> rainbow_matching(const std::vector<BipartiteGraph>& family) {
    if (family.empty()) return RainbowAssignment{};
    int left = family.front().left_size(), right = family.front().right_size();
    for (const BipartiteGraph& g : family)
        if (g.left_size() != left || g.right_size() != right)
            throw BadParamsError("family members must share side sizes");

    std::vector<std::size_t> order(family.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return family[a].edge_count() < family[b].edge_count();
    });
    std::vector<const BipartiteGraph*> fam;
    for (std::size_t i : order) fam.push_back(&family[i]);

    std::vector<char> left_used(static_cast<std::size_t>(left), 0);
    std::vector<char> right_used(static_cast<std::size_t>(right), 0);
    std::vector<std::pair<int, int>> picked;
    if (!detail::rainbow_dfs(fam, 0, left_used, right_used, picked)) return std::nullopt;

    RainbowAssignment out;
    out.pairs.resize(family.size());
    for (std::size_t i = 0; i < order.size(); ++i) out.pairs[order[i]] = picked[i];
    return out;
}

}  // namespace hyperstab

#endif  // HYPERSTAB_SOLVERS_HPP
