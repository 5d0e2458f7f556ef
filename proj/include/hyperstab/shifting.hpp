#ifndef HYPERSTAB_SHIFTING_HPP
#define HYPERSTAB_SHIFTING_HPP

#include <string>
#include <vector>

#include "hyperstab/core.hpp"
#include "hyperstab/errors.hpp"

namespace hyperstab {

// Compression step S_xy: every edge through y but not x moves to x, unless
// the moved edge already exists in the original graph.  Edge count is
// preserved; distinct edges stay distinct because two edges mapping to the
// same replacement would have been equal already.
inline KPartiteHypergraph shift(const KPartiteHypergraph& h, VertexRef x, VertexRef y) {
    if (!h.in_range(x) || !h.in_range(y)) throw OutOfRangeError("shift vertex out of range");
    if (x.cls != y.cls) throw DifferentClassError("shift endpoints must share a class");
    if (x.pos >= y.pos) throw NotOrderedError("shift requires position(x) < position(y)");
    std::vector<Edge> out;
    out.reserve(h.edges().size());
    for (Edge e : h.edges()) {
        if (e[static_cast<std::size_t>(y.cls)] == y.pos) {
            Edge moved = e;
            moved[static_cast<std::size_t>(x.cls)] = x.pos;
            if (!h.has_edge(moved)) e = std::move(moved);
        }
        out.push_back(std::move(e));
    }
    return KPartiteHypergraph::build(h.k(), h.class_sizes(), std::move(out));
}

// Fixed sweep: classes in order, pairs (x, y) with x < y in lexicographic
// order, restarting after any change.  Terminates because the sum of all
// edge positions strictly decreases at every changing step.  Output depends
// on the sweep order but is deterministic.  Optional trace records the
// graph after every changing step (starting graph excluded).
inline KPartiteHypergraph shift_closure(const KPartiteHypergraph& h,
                                        std::vector<KPartiteHypergraph>* trace = nullptr) {
    KPartiteHypergraph cur = h;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int c = 0; c < cur.k() && !changed; ++c) {
            int n = cur.class_sizes()[static_cast<std::size_t>(c)];
            for (int x = 0; x < n && !changed; ++x)
                for (int y = x + 1; y < n && !changed; ++y) {
                    KPartiteHypergraph next = shift(cur, {c, x}, {c, y});
                    if (!(next == cur)) {
                        cur = std::move(next);
                        if (trace) trace->push_back(cur);
                        changed = true;
                    }
                }
        }
    }
    return cur;
}

// Fixed under every S_xy.  Per step-wise induction this is the same as:
// lowering any single coordinate of any edge by one lands on an edge.
inline bool is_partitely_shifted(const KPartiteHypergraph& h) {
    for (const Edge& e : h.edges())
        for (int c = 0; c < h.k(); ++c) {
            if (e[static_cast<std::size_t>(c)] == 0) continue;
            Edge down = e;
            --down[static_cast<std::size_t>(c)];
            if (!h.has_edge(down)) return false;
        }
    return true;
}

}  // namespace hyperstab

#endif  // HYPERSTAB_SHIFTING_HPP
