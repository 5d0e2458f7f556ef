#ifndef HYPERSTAB_JSON_IO_HPP
#define HYPERSTAB_JSON_IO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperstab/core.hpp"
#include "hyperstab/errors.hpp"

namespace hyperstab {

// On-disk format: {"k":3,"sizes":[n1,...,nk],"edges":[[p1,...,pk],...]},
// positions 0-based.  ordered_json keeps the field order stable so output
// is byte-reproducible.
inline nlohmann::ordered_json hypergraph_to_json(const KPartiteHypergraph& h) {
    nlohmann::ordered_json j;
    j["k"] = h.k();
    j["sizes"] = h.class_sizes();
    j["edges"] = h.edges();
    return j;
}

inline KPartiteHypergraph hypergraph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("sizes") || !j.contains("edges"))
        throw ParseError("hypergraph JSON needs fields k, sizes, edges");
    if (!j["k"].is_number_integer() || !j["sizes"].is_array() || !j["edges"].is_array())
        throw ParseError("hypergraph JSON field types: k integer, sizes array, edges array");
    int k = j["k"].get<int>();
    std::vector<int> sizes;
    for (const auto& s : j["sizes"]) {
        if (!s.is_number_integer()) throw ParseError("sizes must be integers");
        sizes.push_back(s.get<int>());
    }
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array()) throw ParseError("each edge must be an array");
        Edge t;
        for (const auto& p : e) {
            if (!p.is_number_integer()) throw ParseError("edge positions must be integers");
            t.push_back(p.get<int>());
        }
        edges.push_back(std::move(t));
    }
    return KPartiteHypergraph::build(k, std::move(sizes), std::move(edges));
}

inline KPartiteHypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
    return hypergraph_from_json(j);
}

inline void save_hypergraph(const KPartiteHypergraph& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << hypergraph_to_json(h).dump() << "\n";
}

inline nlohmann::ordered_json matching_to_json(const Matching& m) {
    nlohmann::ordered_json j;
    j["matching"] = m.edges;
    return j;
}

inline nlohmann::ordered_json cover_to_json(const VertexCover& c) {
    nlohmann::ordered_json j;
    auto arr = nlohmann::ordered_json::array();
    for (VertexRef v : c.vertices) arr.push_back({v.cls, v.pos});
    j["cover"] = arr;
    return j;
}

}  // namespace hyperstab

#endif  // HYPERSTAB_JSON_IO_HPP
