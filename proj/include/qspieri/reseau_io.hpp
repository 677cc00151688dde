#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qspieri/reseau.hpp"

namespace qspieri {

// Poset/reseau file format: a JSON object
//   {"vertices": [{"id": "...", "rank": 0}, ...],
//    "edges": [{"from": "...", "to": "...", "label": 1, "mult": 1}, ...]}
// "rank" may be omitted for unranked multigraphs; duplicate edge entries
// accumulate multiplicity.  Writing is canonical: stable key order, vertex
// and edge order as stored, two-space indentation, LF line endings.

inline LabelledReseau reseau_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw std::invalid_argument("reseau file needs 'vertices' and 'edges'");
    LabelledReseau::Builder b;
    for (const auto& v : j.at("vertices")) {
        std::string id = v.at("id").get<std::string>();
        int rank = v.contains("rank") ? v.at("rank").get<int>() : -1;
        if (v.contains("rank") && rank < 0)
            throw std::invalid_argument("vertex rank must be >= 0");
        b.add_vertex(id, rank);
    }
    for (const auto& e : j.at("edges")) {
        long long mult = e.contains("mult") ? e.at("mult").get<long long>() : 1;
        b.add_edge(e.at("from").get<std::string>(), e.at("to").get<std::string>(),
                   e.at("label").get<int>(), mult);
    }
    return std::move(b).build();
}

inline nlohmann::ordered_json reseau_to_json(const LabelledReseau& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < g.size(); ++v) {
        nlohmann::ordered_json jv;
        jv["id"] = g.id(v);
        if (g.ranked()) jv["rank"] = g.rank(v);
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const ReseauEdge& e : g.edges()) {
        nlohmann::ordered_json je;
        je["from"] = g.id(e.from);
        je["to"] = g.id(e.to);
        je["label"] = e.label;
        je["mult"] = e.mult;
        j["edges"].push_back(je);
    }
    return j;
}

inline std::string write_reseau(const LabelledReseau& g) {
    return reseau_to_json(g).dump(2) + "\n";
}

inline LabelledReseau parse_reseau(const std::string& text) {
    return reseau_from_json(nlohmann::ordered_json::parse(text));
}

inline LabelledReseau read_reseau_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open poset file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_reseau(ss.str());
}

inline void write_reseau_file(const LabelledReseau& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
    if (!out) throw std::invalid_argument("cannot write poset file: " + path);
    out << write_reseau(g);
}

}  // namespace qspieri
