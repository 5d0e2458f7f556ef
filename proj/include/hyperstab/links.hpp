#ifndef HYPERSTAB_LINKS_HPP
#define HYPERSTAB_LINKS_HPP

#include <array>
#include <optional>
#include <vector>

#include "hyperstab/core.hpp"
#include "hyperstab/errors.hpp"

namespace hyperstab {

// Colored link system of a legal triple S against two disjoint edges f1, f2
// (k = 3).  Color i is the class of S's vertex x_i.  Each color has exactly
// two candidate slots joining an f1 vertex to an f2 vertex in the two classes
// other than i:
//   slot 0: (f1's class-j vertex, f2's class-l vertex)   with j < l,
//   slot 1: (f1's class-l vertex, f2's class-j vertex).
// The six slots are pairwise distinct vertex pairs, so per-color set counts
// add up without double counting.
struct LinkSystem {
    Edge f1, f2;
    std::array<VertexRef, 3> s;            // s[i] = S vertex in class i
    std::array<std::array<char, 2>, 3> slot{};  // slot[color][t] present?

    int total() const {
        int t = 0;
        for (const auto& c : slot) t += c[0] + c[1];
        return t;
    }
    int color_count(int color) const {
        return slot[static_cast<std::size_t>(color)][0] + slot[static_cast<std::size_t>(color)][1];
    }

    // The two f1/f2 vertices a slot joins.
    std::pair<VertexRef, VertexRef> slot_pair(int color, int t) const {
        int j = color == 0 ? 1 : 0;
        int l = color == 2 ? 1 : 2;
        if (t == 0) return {{j, f1[static_cast<std::size_t>(j)]}, {l, f2[static_cast<std::size_t>(l)]}};
        return {{l, f1[static_cast<std::size_t>(l)]}, {j, f2[static_cast<std::size_t>(j)]}};
    }

    // Full hypergraph edge realizing a slot: the pair plus x_color.
    Edge slot_realization(int color, int t) const {
        auto [u, v] = slot_pair(color, t);
        Edge e(3);
        e[static_cast<std::size_t>(u.cls)] = u.pos;
        e[static_cast<std::size_t>(v.cls)] = v.pos;
        e[static_cast<std::size_t>(color)] = s[static_cast<std::size_t>(color)].pos;
        return e;
    }
};

inline LinkSystem link_system(const KPartiteHypergraph& h, const LegalSet& s, const Edge& f1,
                              const Edge& f2) {
    if (h.k() != 3) throw BadArityError("link systems are defined for k = 3 only");
    if (f1.size() != 3 || f2.size() != 3) throw BadArityError("f1 and f2 must be triples");
    if (s.size() != 3) throw BadArityError("S must have one vertex in each of the 3 classes");
    for (int c = 0; c < 3; ++c) {
        if (f1[static_cast<std::size_t>(c)] < 0 ||
            f1[static_cast<std::size_t>(c)] >= h.class_sizes()[static_cast<std::size_t>(c)] ||
            f2[static_cast<std::size_t>(c)] < 0 ||
            f2[static_cast<std::size_t>(c)] >= h.class_sizes()[static_cast<std::size_t>(c)])
            throw OutOfRangeError("f1/f2 position out of range");
        if (f1[static_cast<std::size_t>(c)] == f2[static_cast<std::size_t>(c)])
            throw OverlapError("f1 and f2 must be disjoint");
    }
    LinkSystem sys;
    sys.f1 = f1;
    sys.f2 = f2;
    for (VertexRef v : s.vertices()) {
        if (!h.in_range(v)) throw OutOfRangeError("S vertex out of range");
        if (f1[static_cast<std::size_t>(v.cls)] == v.pos || f2[static_cast<std::size_t>(v.cls)] == v.pos)
            throw OverlapError("S must avoid f1 and f2");
        sys.s[static_cast<std::size_t>(v.cls)] = v;
    }
    for (int color = 0; color < 3; ++color)
        for (int t = 0; t < 2; ++t)
            sys.slot[static_cast<std::size_t>(color)][static_cast<std::size_t>(t)] =
                h.has_edge(sys.slot_realization(color, t)) ? 1 : 0;
    return sys;
}

// One present slot per color, the three pairwise vertex-disjoint.
struct RainbowTriple {
    std::array<int, 3> slot;    // chosen slot index per color
    std::array<Edge, 3> edges;  // slot realizations, edges[i] contains x_i
};

// Exhaustive over the <= 2^3 one-per-color choices, first hit wins.
inline std::optional<RainbowTriple> rainbow_extension(const LinkSystem& sys) {
    for (int t0 = 0; t0 < 2; ++t0) {
        if (!sys.slot[0][static_cast<std::size_t>(t0)]) continue;
        for (int t1 = 0; t1 < 2; ++t1) {
            if (!sys.slot[1][static_cast<std::size_t>(t1)]) continue;
            for (int t2 = 0; t2 < 2; ++t2) {
                if (!sys.slot[2][static_cast<std::size_t>(t2)]) continue;
                std::array<std::pair<VertexRef, VertexRef>, 3> pairs = {
                    sys.slot_pair(0, t0), sys.slot_pair(1, t1), sys.slot_pair(2, t2)};
                bool ok = true;
                for (int a = 0; a < 3 && ok; ++a)
                    for (int b = a + 1; b < 3 && ok; ++b) {
                        auto shares = [](const std::pair<VertexRef, VertexRef>& p,
                                         const std::pair<VertexRef, VertexRef>& q) {
                            return p.first == q.first || p.first == q.second ||
                                   p.second == q.first || p.second == q.second;
                        };
                        if (shares(pairs[static_cast<std::size_t>(a)], pairs[static_cast<std::size_t>(b)]))
                            ok = false;
                    }
                if (ok) {
                    RainbowTriple out;
                    out.slot = {t0, t1, t2};
                    out.edges = {sys.slot_realization(0, t0), sys.slot_realization(1, t1),
                                 sys.slot_realization(2, t2)};
                    return out;
                }
            }
        }
    }
    return std::nullopt;
}

// One row per slot configuration of the 64-case census.
struct CensusRow {
    std::array<std::array<char, 2>, 3> slot{};
    int total = 0;
    bool rainbow = false;            // one-per-color disjoint triple exists
    bool perfect_matching = false;   // 3 present slots covering all 6 vertices
    bool pm_not_rainbow = false;     // a perfect matching missing some color
};

// Exhaustive sweep over all 4^3 = 64 slot configurations on a canonical
// geometry.  Establishes the extension bound: every total >= 5 row has a
// rainbow triple, and every perfect matching of the slot union is rainbow.
inline std::vector<CensusRow> extension_lemma_census() {
    LinkSystem sys;
    sys.f1 = {0, 0, 0};
    sys.f2 = {1, 1, 1};
    sys.s = {VertexRef{0, 2}, VertexRef{1, 2}, VertexRef{2, 2}};
    std::vector<CensusRow> rows;
    for (int mask = 0; mask < 64; ++mask) {
        for (int color = 0; color < 3; ++color)
            for (int t = 0; t < 2; ++t)
                sys.slot[static_cast<std::size_t>(color)][static_cast<std::size_t>(t)] =
                    (mask >> (2 * color + t)) & 1;
        CensusRow row;
        row.slot = sys.slot;
        row.total = sys.total();
        row.rainbow = rainbow_extension(sys).has_value();

        // Enumerate 3-subsets of present slots; a perfect matching covers all
        // six f1/f2 vertices, i.e. its pairs are pairwise disjoint.
        std::vector<std::pair<int, int>> present;
        for (int color = 0; color < 3; ++color)
            for (int t = 0; t < 2; ++t)
                if (sys.slot[static_cast<std::size_t>(color)][static_cast<std::size_t>(t)])
                    present.emplace_back(color, t);
        for (std::size_t a = 0; a < present.size(); ++a)
            for (std::size_t b = a + 1; b < present.size(); ++b)
                for (std::size_t c = b + 1; c < present.size(); ++c) {
                    std::array<std::pair<VertexRef, VertexRef>, 3> ps = {
                        sys.slot_pair(present[a].first, present[a].second),
                        sys.slot_pair(present[b].first, present[b].second),
                        sys.slot_pair(present[c].first, present[c].second)};
                    bool disjoint = true;
                    for (int i = 0; i < 3 && disjoint; ++i)
                        for (int j = i + 1; j < 3 && disjoint; ++j)
                            if (ps[static_cast<std::size_t>(i)].first == ps[static_cast<std::size_t>(j)].first ||
                                ps[static_cast<std::size_t>(i)].first == ps[static_cast<std::size_t>(j)].second ||
                                ps[static_cast<std::size_t>(i)].second == ps[static_cast<std::size_t>(j)].first ||
                                ps[static_cast<std::size_t>(i)].second == ps[static_cast<std::size_t>(j)].second)
                                disjoint = false;
                    if (!disjoint) continue;
                    row.perfect_matching = true;
                    bool one_per_color = present[a].first != present[b].first &&
                                         present[a].first != present[c].first &&
                                         present[b].first != present[c].first;
                    if (!one_per_color) row.pm_not_rainbow = true;
                }
        rows.push_back(row);
    }
    return rows;
}

// Swap f1, f2 out of M for the three rainbow-extended edges through S,
// growing the matching by one; nullopt when no rainbow triple exists.
inline std::optional<Matching> extend_matching(const KPartiteHypergraph& h, const Matching& m,
                                               const LegalSet& s, const Edge& f1, const Edge& f2) {
    auto in_m = [&](const Edge& e) {
        for (const Edge& f : m.edges)
            if (f == e) return true;
        return false;
    };
    if (!in_m(f1) || !in_m(f2)) throw NotInMatchingError("f1 and f2 must belong to M");
    if (!is_matching(h, m)) throw BadParamsError("M is not a matching of H");
    for (VertexRef v : s.vertices())
        for (const Edge& f : m.edges)
            if (f[static_cast<std::size_t>(v.cls)] == v.pos)
                throw OverlapError("S must avoid V(M)");

    LinkSystem sys = link_system(h, s, f1, f2);
    auto triple = rainbow_extension(sys);
    if (!triple) return std::nullopt;
    Matching out;
    for (const Edge& f : m.edges)
        if (f != f1 && f != f2) out.edges.push_back(f);
    for (const Edge& e : triple->edges) out.edges.push_back(e);
    std::sort(out.edges.begin(), out.edges.end());
    if (!is_matching(h, out)) throw BadParamsError("extension produced an invalid matching");
    return out;
}

}  // namespace hyperstab

#endif  // HYPERSTAB_LINKS_HPP
