#ifndef HYPERSTAB_BIPARTITE_HPP
#define HYPERSTAB_BIPARTITE_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hyperstab/errors.hpp"

namespace hyperstab {

// Simple bipartite graph on [0, left) x [0, right).  Edge list is kept
// sorted so iteration order (and everything derived from it) is stable.
class BipartiteGraph {
public:
    using EdgePair = std::pair<int, int>;

    BipartiteGraph(int left, int right) : left_(left), right_(right) {
        if (left < 0 || right < 0) throw BadParamsError("negative side size");
    }

    static BipartiteGraph build(int left, int right, const std::vector<EdgePair>& edges) {
        BipartiteGraph g(left, right);
        for (const auto& e : edges) g.add_edge(e.first, e.second);
        return g;
    }

    void add_edge(int l, int r) {
        if (l < 0 || l >= left_ || r < 0 || r >= right_)
            throw OutOfRangeError("bipartite edge (" + std::to_string(l) + "," + std::to_string(r) +
                                  ") out of range");
        EdgePair e{l, r};
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it != edges_.end() && *it == e) throw DuplicateEdgeError("duplicate bipartite edge");
        edges_.insert(it, e);
    }

    bool has_edge(int l, int r) const {
        return std::binary_search(edges_.begin(), edges_.end(), EdgePair{l, r});
    }

    int left_size() const { return left_; }
    int right_size() const { return right_; }
    long edge_count() const { return static_cast<long>(edges_.size()); }
    const std::vector<EdgePair>& edges() const { return edges_; }

    std::vector<std::vector<int>> left_adjacency() const {
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(left_));
        for (const auto& [l, r] : edges_) adj[static_cast<std::size_t>(l)].push_back(r);
        return adj;
    }

    friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
        return a.left_ == b.left_ && a.right_ == b.right_ && a.edges_ == b.edges_;
    }

private:
    int left_;
    int right_;
    std::vector<EdgePair> edges_;
};

}  // namespace hyperstab

#endif  // HYPERSTAB_BIPARTITE_HPP
