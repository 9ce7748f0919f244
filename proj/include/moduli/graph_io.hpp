#pragma once

#include "moduli/rational.hpp"
#include "moduli/stable_graph.hpp"
#include "moduli/ternary_form.hpp"

#include "json.hpp"

#include <fstream>
#include <string>
#include <vector>

namespace moduli {

// Graph file format: {"vertices": [{"genus": g}, ...],
//                     "edges": [{"ends": [a, b], "thickness": k}, ...]}
// Thickness may be omitted on input and defaults to 1. Emitted files keep
// the field order above.
inline StableGraph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw std::domain_error("graph file needs a \"vertices\" array");
    std::vector<GraphVertex> verts;
    for (const auto& jv : j["vertices"]) {
        if (!jv.is_object() || !jv.contains("genus") || !jv["genus"].is_number_integer())
            throw std::domain_error("each vertex needs an integer \"genus\"");
        verts.push_back({jv["genus"].get<int>()});
    }
    std::vector<GraphEdge> edges;
    if (j.contains("edges")) {
        for (const auto& je : j["edges"]) {
            if (!je.is_object() || !je.contains("ends") || !je["ends"].is_array() ||
                je["ends"].size() != 2)
                throw std::domain_error("each edge needs \"ends\": [a, b]");
            GraphEdge e;
            e.a = je["ends"][0].get<int>();
            e.b = je["ends"][1].get<int>();
            e.thickness = je.contains("thickness") ? je["thickness"].get<int>() : 1;
            edges.push_back(e);
        }
    }
    return StableGraph(std::move(verts), std::move(edges));
}

inline nlohmann::ordered_json graph_to_json(const StableGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    for (const auto& v : g.vertices())
        j["vertices"].push_back({{"genus", v.genus}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : g.edges()) {
        nlohmann::ordered_json je;
        je["ends"] = {e.a, e.b};
        je["thickness"] = e.thickness;
        j["edges"].push_back(je);
    }
    return j;
}

inline StableGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open graph file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error("malformed graph file " + path + ": " + e.what());
    }
    return graph_from_json(j);
}

inline void write_graph_file(const StableGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write graph file: " + path);
    out << graph_to_json(g).dump(2) << "\n";
}

// Ternary form file format: {"degree": d,
//   "terms": [{"exponents": [i, j, k], "coeff": "p/q"}, ...]}
inline TernaryForm ternary_form_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer())
        throw std::domain_error("form file needs an integer \"degree\"");
    if (!j.contains("terms") || !j["terms"].is_array())
        throw std::domain_error("form file needs a \"terms\" array");
    std::vector<TernaryTerm> terms;
    for (const auto& jt : j["terms"]) {
        if (!jt.is_object() || !jt.contains("exponents") || !jt["exponents"].is_array() ||
            jt["exponents"].size() != 3 || !jt.contains("coeff"))
            throw std::domain_error("each term needs \"exponents\": [i, j, k] and \"coeff\"");
        TernaryTerm t;
        t.ex = jt["exponents"][0].get<int>();
        t.ey = jt["exponents"][1].get<int>();
        t.ez = jt["exponents"][2].get<int>();
        const auto& jc = jt["coeff"];
        if (jc.is_string())
            t.coeff = parse_rational(jc.get<std::string>());
        else if (jc.is_number_integer())
            t.coeff = Rat(jc.get<long long>());
        else
            throw std::domain_error("term coefficient must be \"p/q\" or an integer");
        terms.push_back(std::move(t));
    }
    return TernaryForm(j["degree"].get<int>(), terms);
}

inline TernaryForm read_ternary_form_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open form file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::domain_error("malformed form file " + path + ": " + e.what());
    }
    return ternary_form_from_json(j);
}

} // namespace moduli
