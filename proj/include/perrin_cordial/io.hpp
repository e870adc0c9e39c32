#pragma once

/**
 * @file io.hpp
 * @brief JSON for graphs and labelings, and DOT export in the red/black
 *        drawing convention.
 *
 * Graph:    {"vertex_count": N, "edges": [[u,v],...], "roles": {"0":"hub",...},
 *            "family": {"name": "...", "params": [...]}}
 * Labeling: {"domain_max": N, "assignment": [{"vertex": v, "index": i}, ...]}
 *
 * Parsing checks format only. Whether a labeling is valid for a graph is
 * decided later by is_valid(), so a duplicated index parses fine.
 */

#include "perrin_cordial/graph.hpp"
#include "perrin_cordial/labeling.hpp"
#include "perrin_cordial/perrin.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace perrin_cordial {

class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

using json = nlohmann::json;

inline json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw format_error("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

inline std::size_t require_count(const json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw format_error("field '" + field + "': expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

inline const json& require_field(const json& obj, const char* name) {
    auto it = obj.find(name);
    if (it == obj.end()) throw format_error(std::string("missing field '") + name + "'");
    return *it;
}

} // namespace detail

inline std::string write_graph(const Graph& g) {
    using detail::json;
    json j;
    j["vertex_count"] = g.vertex_count();
    json edges = json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    json roles = json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) roles[std::to_string(v)] = std::string(to_string(g.role(v)));
    j["roles"] = std::move(roles);
    if (g.family()) {
        j["family"] = {{"name", std::string(to_string(g.family()->family))}, {"params", g.family()->params}};
    }
    return j.dump() + "\n";
}

inline Graph read_graph(const std::string& text) {
    using detail::json;
    const json j = detail::parse_json(text);
    if (!j.is_object()) throw format_error("graph: top level must be an object");
    const std::size_t n = detail::require_count(detail::require_field(j, "vertex_count"), "vertex_count");

    const json& edges_j = detail::require_field(j, "edges");
    if (!edges_j.is_array()) throw format_error("field 'edges': expected an array");
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < edges_j.size(); ++k) {
        const json& e = edges_j[k];
        const std::string where = "edges[" + std::to_string(k) + "]";
        if (!e.is_array() || e.size() != 2) throw format_error(where + ": expected [u, v]");
        const std::size_t u = detail::require_count(e[0], where + "[0]");
        const std::size_t v = detail::require_count(e[1], where + "[1]");
        if (u >= n || v >= n) {
            throw format_error(where + ": endpoint out of range for vertex_count " + std::to_string(n));
        }
        if (u == v) throw format_error(where + ": self-loop");
        edges.push_back({u, v});
    }

    std::vector<Role> roles(n, Role::generic);
    if (auto it = j.find("roles"); it != j.end()) {
        if (!it->is_object()) throw format_error("field 'roles': expected an object");
        for (const auto& [key, value] : it->items()) {
            const std::string where = "roles[\"" + key + "\"]";
            std::size_t v = 0;
            try {
                std::size_t used = 0;
                v = std::stoul(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw format_error(where + ": key is not a vertex id");
            }
            if (v >= n) throw format_error(where + ": vertex out of range");
            if (!value.is_string()) throw format_error(where + ": expected a role name");
            auto role = role_from_string(value.get<std::string>());
            if (!role) throw format_error(where + ": unknown role '" + value.get<std::string>() + "'");
            roles[v] = *role;
        }
    }

    std::optional<FamilySpec> family;
    if (auto it = j.find("family"); it != j.end() && !it->is_null()) {
        const json& name = detail::require_field(*it, "name");
        if (!name.is_string()) throw format_error("family.name: expected a string");
        auto f = family_from_string(name.get<std::string>());
        if (!f) throw format_error("family.name: unknown family '" + name.get<std::string>() + "'");
        FamilySpec spec{*f, {}};
        const json& params = detail::require_field(*it, "params");
        if (!params.is_array()) throw format_error("family.params: expected an array");
        for (std::size_t k = 0; k < params.size(); ++k)
            spec.params.push_back(detail::require_count(params[k], "family.params[" + std::to_string(k) + "]"));
        family = std::move(spec);
    }
    try {
        return Graph(n, std::move(edges), std::move(roles), std::move(family));
    } catch (const graph_error& e) {
        throw format_error(std::string("edges: ") + e.what());
    }
}

inline std::string write_labeling(const PerrinLabeling& f) {
    using detail::json;
    json j;
    j["domain_max"] = f.domain_max;
    json entries = json::array();
    for (const auto& [v, i] : f.assignment) entries.push_back({{"vertex", v}, {"index", i}});
    j["assignment"] = std::move(entries);
    return j.dump() + "\n";
}

inline PerrinLabeling read_labeling(const std::string& text) {
    using detail::json;
    const json j = detail::parse_json(text);
    if (!j.is_object()) throw format_error("labeling: top level must be an object");
    PerrinLabeling f;
    f.domain_max = detail::require_count(detail::require_field(j, "domain_max"), "domain_max");
    const json& entries = detail::require_field(j, "assignment");
    if (!entries.is_array()) throw format_error("field 'assignment': expected an array");
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string where = "assignment[" + std::to_string(k) + "]";
        const json& e = entries[k];
        if (!e.is_object()) throw format_error(where + ": expected an object");
        const std::size_t v = detail::require_count(detail::require_field(e, "vertex"), where + ".vertex");
        const std::size_t i = detail::require_count(detail::require_field(e, "index"), where + ".index");
        if (!f.assignment.emplace(v, i).second) {
            throw format_error(where + ": vertex " + std::to_string(v) + " assigned twice");
        }
    }
    return f;
}

/// Graphviz DOT. Vertices: red when the label is even, black when odd,
/// labelled "P_i". Edges: red for induced label 0, black for 1.
inline std::string export_dot(const Graph& g, const PerrinLabeling& f) {
    if (auto err = validation_error(g, f); !err.empty()) throw labeling_error("invalid labeling: " + err);
    const ParityPattern pattern = to_parity(f);
    auto color = [](bool even) { return even ? "red" : "black"; };
    std::ostringstream os;
    os << "graph G {\n";
    if (g.family()) os << "  label=\"" << g.family()->label() << "\";\n";
    os << "  node [shape=circle, style=filled, fontcolor=white];\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const char* c = color(pattern[v] == Parity::even);
        os << "  " << v << " [label=\"P_" << f.assignment.at(v) << "\", color=" << c << ", fillcolor=" << c << "];\n";
    }
    for (const auto& e : g.edges()) {
        os << "  " << e.u << " -- " << e.v << " [color=" << color(induced_edge_label(pattern[e.u], pattern[e.v]) == 0)
           << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace perrin_cordial
