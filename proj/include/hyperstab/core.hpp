#ifndef HYPERSTAB_CORE_HPP
#define HYPERSTAB_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperstab/bipartite.hpp"
#include "hyperstab/errors.hpp"

namespace hyperstab {

// A vertex of a k-partite hypergraph: (partition class, position inside it).
// Positions are 0-based and also encode the linear order used by shifting:
// smaller position = earlier vertex.
struct VertexRef {
    int cls = 0;
    int pos = 0;
    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

// An edge is a k-tuple; slot i holds a position in class i.  The tuple
// representation makes every edge legal by construction.
using Edge = std::vector<int>;

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (int v : e) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 0x100000001b3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

// k-partite k-uniform hypergraph.  Immutable after build(); edge list is
// kept in lexicographic order, with a hash set for O(1) membership.
class KPartiteHypergraph {
public:
    static KPartiteHypergraph build(int k, std::vector<int> class_sizes, std::vector<Edge> edges) {
        if (k < 2) throw BadParamsError("k must be at least 2");
        if (static_cast<int>(class_sizes.size()) != k)
            throw BadParamsError("expected " + std::to_string(k) + " class sizes");
        for (int s : class_sizes)
            if (s < 0) throw BadParamsError("negative class size");
        for (const Edge& e : edges) {
            if (static_cast<int>(e.size()) != k)
                throw BadArityError("edge arity " + std::to_string(e.size()) + ", expected " +
                                    std::to_string(k));
            for (int i = 0; i < k; ++i)
                if (e[i] < 0 || e[i] >= class_sizes[i])
                    throw OutOfRangeError("position " + std::to_string(e[i]) +
                                          " out of range for class " + std::to_string(i));
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1]) throw DuplicateEdgeError("duplicate edge");
        return KPartiteHypergraph(k, std::move(class_sizes), std::move(edges));
    }

    int k() const { return k_; }
    const std::vector<int>& class_sizes() const { return sizes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    long edge_count() const { return static_cast<long>(edges_.size()); }

    int total_vertices() const {
        int t = 0;
        for (int s : sizes_) t += s;
        return t;
    }

    bool has_edge(const Edge& e) const { return edge_set_.count(e) > 0; }

    bool in_range(VertexRef v) const {
        return v.cls >= 0 && v.cls < k_ && v.pos >= 0 && v.pos < sizes_[static_cast<std::size_t>(v.cls)];
    }

    std::vector<VertexRef> all_vertices() const {
        std::vector<VertexRef> vs;
        for (int c = 0; c < k_; ++c)
            for (int p = 0; p < sizes_[static_cast<std::size_t>(c)]; ++p) vs.push_back({c, p});
        return vs;
    }

    friend bool operator==(const KPartiteHypergraph& a, const KPartiteHypergraph& b) {
        return a.k_ == b.k_ && a.sizes_ == b.sizes_ && a.edges_ == b.edges_;
    }

private:
    KPartiteHypergraph(int k, std::vector<int> sizes, std::vector<Edge> edges)
        : k_(k), sizes_(std::move(sizes)), edges_(std::move(edges)),
          edge_set_(edges_.begin(), edges_.end()) {}

    int k_;
    std::vector<int> sizes_;
    std::vector<Edge> edges_;
    std::unordered_set<Edge, EdgeHash> edge_set_;
};

inline bool edge_contains(const Edge& e, VertexRef v) {
    return v.cls >= 0 && v.cls < static_cast<int>(e.size()) && e[static_cast<std::size_t>(v.cls)] == v.pos;
}

inline bool edge_meets(const Edge& e, const std::vector<VertexRef>& set) {
    for (VertexRef v : set)
        if (edge_contains(e, v)) return true;
    return false;
}

inline bool edges_disjoint(const Edge& a, const Edge& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == b[i]) return false;
    return true;
}

inline std::vector<VertexRef> dedupe_vertices(std::vector<VertexRef> vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

// True iff no two members share a class (set semantics; duplicates collapse).
inline bool is_legal_set(const std::vector<VertexRef>& vs) {
    auto s = dedupe_vertices(vs);
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].cls == s[i - 1].cls) return false;
    return true;
}

// Vertex set with at most one member per class, kept sorted by class.
class LegalSet {
public:
    LegalSet() = default;
    explicit LegalSet(std::vector<VertexRef> vs) : vertices_(dedupe_vertices(std::move(vs))) {
        for (std::size_t i = 1; i < vertices_.size(); ++i)
            if (vertices_[i].cls == vertices_[i - 1].cls)
                throw OverlapError("two vertices in class " + std::to_string(vertices_[i].cls));
    }
    const std::vector<VertexRef>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

private:
    std::vector<VertexRef> vertices_;
};

struct Matching {
    std::vector<Edge> edges;
    std::size_t size() const { return edges.size(); }
};

struct VertexCover {
    std::vector<VertexRef> vertices;
    std::size_t size() const { return vertices.size(); }
};

inline bool is_matching(const KPartiteHypergraph& h, const Matching& m) {
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        if (!h.has_edge(m.edges[i])) return false;
        for (std::size_t j = i + 1; j < m.edges.size(); ++j)
            if (!edges_disjoint(m.edges[i], m.edges[j])) return false;
    }
    return true;
}

inline bool is_perfect_matching(const KPartiteHypergraph& h, const Matching& m) {
    if (!is_matching(h, m)) return false;
    for (int s : h.class_sizes())
        if (s != static_cast<int>(m.size())) return false;
    return true;
}

inline bool is_vertex_cover(const KPartiteHypergraph& h, const VertexCover& c) {
    for (const Edge& e : h.edges())
        if (!edge_meets(e, c.vertices)) return false;
    return true;
}

// Number of edges containing every vertex of T.  An illegal or out-of-range
// T is contained in no edge, so the answer is 0.
inline int degree(const KPartiteHypergraph& h, const std::vector<VertexRef>& t) {
    auto set = dedupe_vertices(t);
    for (std::size_t i = 1; i < set.size(); ++i)
        if (set[i].cls == set[i - 1].cls) return 0;
    for (VertexRef v : set)
        if (!h.in_range(v)) return 0;
    int d = 0;
    for (const Edge& e : h.edges()) {
        bool all = true;
        for (VertexRef v : set)
            if (e[static_cast<std::size_t>(v.cls)] != v.pos) {
                all = false;
                break;
            }
        if (all) ++d;
    }
    return d;
}

namespace detail {

inline int min_degree_over_legal(const KPartiteHypergraph& h, int level, int first_class,
                                 std::vector<VertexRef>& acc, bool& any) {
    if (level == 0) {
        any = true;
        return degree(h, acc);
    }
    int best = -1;
    for (int c = first_class; c <= h.k() - level; ++c) {
        for (int p = 0; p < h.class_sizes()[static_cast<std::size_t>(c)]; ++p) {
            acc.push_back({c, p});
            int d = min_degree_over_legal(h, level - 1, c + 1, acc, any);
            acc.pop_back();
            if (d >= 0 && (best < 0 || d < best)) best = d;
            if (best == 0) return 0;
        }
    }
    return best;
}

}  // namespace detail

// Minimum degree over all legal l-subsets; l = 0 gives the edge count.
// Returns 0 when no legal l-subset exists (only possible with empty classes).
inline int min_l_degree(const KPartiteHypergraph& h, int l) {
    if (l < 0 || l > h.k()) throw BadLevelError("level " + std::to_string(l) + " out of [0, k]");
    if (l == 0) return static_cast<int>(h.edge_count());
    std::vector<VertexRef> acc;
    bool any = false;
    int best = detail::min_degree_over_legal(h, l, 0, acc, any);
    return any ? best : 0;
}

struct RemovalResult {
    KPartiteHypergraph graph;
    // old_to_new[c][old_pos] = new position, or -1 if the vertex was removed.
    std::vector<std::vector<int>> old_to_new;
};

// H - T: removed vertices disappear, surviving positions are re-indexed to
// stay contiguous, and edges meeting T are dropped.
inline RemovalResult remove_vertices(const KPartiteHypergraph& h, const std::vector<VertexRef>& t) {
    auto set = dedupe_vertices(t);
    for (VertexRef v : set)
        if (!h.in_range(v)) throw OutOfRangeError("removed vertex out of range");
    std::vector<std::vector<char>> removed(static_cast<std::size_t>(h.k()));
    for (int c = 0; c < h.k(); ++c)
        removed[static_cast<std::size_t>(c)].assign(
            static_cast<std::size_t>(h.class_sizes()[static_cast<std::size_t>(c)]), 0);
    for (VertexRef v : set) removed[static_cast<std::size_t>(v.cls)][static_cast<std::size_t>(v.pos)] = 1;

    std::vector<std::vector<int>> old_to_new(static_cast<std::size_t>(h.k()));
    std::vector<int> new_sizes(static_cast<std::size_t>(h.k()));
    for (int c = 0; c < h.k(); ++c) {
        int next = 0;
        auto& map = old_to_new[static_cast<std::size_t>(c)];
        map.assign(static_cast<std::size_t>(h.class_sizes()[static_cast<std::size_t>(c)]), -1);
        for (std::size_t p = 0; p < map.size(); ++p)
            if (!removed[static_cast<std::size_t>(c)][p]) map[p] = next++;
        new_sizes[static_cast<std::size_t>(c)] = next;
    }

    std::vector<Edge> kept;
    for (const Edge& e : h.edges()) {
        Edge mapped(static_cast<std::size_t>(h.k()));
        bool alive = true;
        for (int c = 0; c < h.k(); ++c) {
            int np = old_to_new[static_cast<std::size_t>(c)][static_cast<std::size_t>(e[static_cast<std::size_t>(c)])];
            if (np < 0) {
                alive = false;
                break;
            }
            mapped[static_cast<std::size_t>(c)] = np;
        }
        if (alive) kept.push_back(std::move(mapped));
    }
    return {KPartiteHypergraph::build(h.k(), std::move(new_sizes), std::move(kept)),
            std::move(old_to_new)};
}

// Link graph of x with respect to vertex sets A, B (3-partite only):
// bipartite graph on (A, B), indices following the order of the arguments,
// with an edge (i, j) iff {A[i], B[j], x} is an edge of H.
inline BipartiteGraph link_graph(const KPartiteHypergraph& h, VertexRef x,
                                 const std::vector<VertexRef>& a, const std::vector<VertexRef>& b) {
    if (h.k() != 3) throw BadArityError("link graphs are defined for k = 3 only");
    if (!h.in_range(x)) throw OutOfRangeError("link vertex out of range");
    auto in = [](const std::vector<VertexRef>& vs, VertexRef v) {
        return std::find(vs.begin(), vs.end(), v) != vs.end();
    };
    for (VertexRef v : a)
        if (in(b, v)) throw OverlapError("A and B overlap");
    if (in(a, x) || in(b, x)) throw OverlapError("x lies inside A or B");

    BipartiteGraph g(static_cast<int>(a.size()), static_cast<int>(b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            VertexRef u = a[i], v = b[j];
            if (u.cls == v.cls || u.cls == x.cls || v.cls == x.cls) continue;
            Edge e(3);
            e[static_cast<std::size_t>(u.cls)] = u.pos;
            e[static_cast<std::size_t>(v.cls)] = v.pos;
            e[static_cast<std::size_t>(x.cls)] = x.pos;
            if (h.has_edge(e)) g.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return g;
}

// Number of edges intersecting both A and B (A, B assumed disjoint).
inline long edges_between(const KPartiteHypergraph& h, const std::vector<VertexRef>& a,
                          const std::vector<VertexRef>& b) {
    long count = 0;
    for (const Edge& e : h.edges())
        if (edge_meets(e, a) && edge_meets(e, b)) ++count;
    return count;
}

}  // namespace hyperstab

#endif  // HYPERSTAB_CORE_HPP
