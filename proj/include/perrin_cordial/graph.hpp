#pragma once

/**
 * @file graph.hpp
 * @brief Simple undirected graphs and the ten labeled graph families.
 *
 * Canonical vertex numbering per family (labelings are reproducible from it):
 *
 *   Path(n)                 0..n-1 along the path
 *   Cycle(n)                0..n-1 around the cycle
 *   Complete(n)             0..n-1
 *   CompleteBipartite(m,n)  part A = 0..m-1, part B = m..m+n-1
 *   Star(n)                 centre 0, leaves 1..n   (K_{1,n})
 *   Wheel(n)                rim 0..n-1 in cycle order, hub n
 *   Bistar(m,n)             apexes u = 0, v = 1; u's pendants 2..m+1,
 *                           v's pendants m+2..m+n+1
 *   TriangularSnake(n)      path v_1..v_{n+1} = 0..n; tip u_i = n+i,
 *                           adjacent to v_i and v_{i+1}
 *   Friendship(n)           apex 0; blade i = {0, 2i-1, 2i}
 *   Jellyfish(m1,m2)        chord pair v1 = 0, v2 = 1; pendant hubs v3 = 2,
 *                           v4 = 3; edges v1v2 v1v3 v1v4 v2v3 v2v4;
 *                           v3's m1 pendants follow at 4.., then v4's m2
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace perrin_cordial {

using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Role { apex, hub, rim, path, pendant, blade_tip, internal, generic };

constexpr std::string_view to_string(Role r) noexcept {
    switch (r) {
    case Role::apex: return "apex";
    case Role::hub: return "hub";
    case Role::rim: return "rim";
    case Role::path: return "path";
    case Role::pendant: return "pendant";
    case Role::blade_tip: return "blade-tip";
    case Role::internal: return "internal";
    case Role::generic: return "generic";
    }
    return "generic";
}

inline std::optional<Role> role_from_string(std::string_view s) {
    for (Role r : {Role::apex, Role::hub, Role::rim, Role::path, Role::pendant, Role::blade_tip,
                   Role::internal, Role::generic}) {
        if (to_string(r) == s) return r;
    }
    return std::nullopt;
}

enum class Family {
    path,
    cycle,
    complete,
    complete_bipartite,
    star,
    wheel,
    bistar,
    triangular_snake,
    friendship,
    jellyfish
};

inline constexpr Family all_families[] = {Family::path,   Family::cycle,     Family::complete,
                                          Family::complete_bipartite,        Family::star,
                                          Family::wheel,  Family::bistar,    Family::triangular_snake,
                                          Family::friendship,                Family::jellyfish};

constexpr std::string_view to_string(Family f) noexcept {
    switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete-bipartite";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::bistar: return "bistar";
    case Family::triangular_snake: return "triangular-snake";
    case Family::friendship: return "friendship";
    case Family::jellyfish: return "jellyfish";
    }
    return "path";
}

inline std::optional<Family> family_from_string(std::string_view s) {
    for (Family f : all_families) {
        if (to_string(f) == s) return f;
    }
    return std::nullopt;
}

constexpr std::size_t param_count(Family f) noexcept {
    switch (f) {
    case Family::complete_bipartite:
    case Family::bistar:
    case Family::jellyfish: return 2;
    default: return 1;
    }
}

/// Lower bound for every parameter of the family.
constexpr std::size_t param_minimum(Family f) noexcept {
    switch (f) {
    case Family::cycle:
    case Family::wheel: return 3;
    case Family::jellyfish: return 0;
    default: return 1;
    }
}

class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class graph_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
    Family family = Family::path;
    std::vector<std::size_t> params;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

    static FamilySpec path(std::size_t n) { return {Family::path, {n}}; }
    static FamilySpec cycle(std::size_t n) { return {Family::cycle, {n}}; }
    static FamilySpec complete(std::size_t n) { return {Family::complete, {n}}; }
    static FamilySpec complete_bipartite(std::size_t m, std::size_t n) {
        return {Family::complete_bipartite, {m, n}};
    }
    static FamilySpec star(std::size_t n) { return {Family::star, {n}}; }
    static FamilySpec wheel(std::size_t n) { return {Family::wheel, {n}}; }
    static FamilySpec bistar(std::size_t m, std::size_t n) { return {Family::bistar, {m, n}}; }
    static FamilySpec triangular_snake(std::size_t n) { return {Family::triangular_snake, {n}}; }
    static FamilySpec friendship(std::size_t n) { return {Family::friendship, {n}}; }
    static FamilySpec jellyfish(std::size_t m1, std::size_t m2) { return {Family::jellyfish, {m1, m2}}; }

    /// Throws parameter_error naming the violated bound.
    void validate() const {
        const std::size_t want = param_count(family);
        if (params.size() != want) {
            std::ostringstream os;
            os << to_string(family) << " takes " << want << " parameter(s), got " << params.size();
            throw parameter_error(os.str());
        }
        const std::size_t lo = param_minimum(family);
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (params[i] < lo) {
                std::ostringstream os;
                os << to_string(family) << " parameter " << i + 1 << " = " << params[i] << " violates bound >= "
                   << lo;
                throw parameter_error(os.str());
            }
        }
    }

    std::string label() const {
        std::ostringstream os;
        os << to_string(family) << '(';
        for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
        os << ')';
        return os.str();
    }
};

/// Immutable simple undirected graph. Edges are stored as (u < v) pairs in
/// ascending order.
class Graph {
public:
    Graph() = default;

    Graph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<Role> roles = {},
          std::optional<FamilySpec> family = std::nullopt)
        : vertex_count_(vertex_count), edges_(std::move(edges)), roles_(std::move(roles)),
          family_(std::move(family)) {
        if (roles_.empty()) roles_.assign(vertex_count_, Role::generic);
        if (roles_.size() != vertex_count_) throw graph_error("role table size differs from vertex count");
        for (auto& e : edges_) {
            if (e.u == e.v) throw graph_error("self-loop at vertex " + std::to_string(e.u));
            if (e.u >= vertex_count_ || e.v >= vertex_count_) {
                throw graph_error("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") has an endpoint outside 0.." + std::to_string(vertex_count_) + "-1");
            }
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end()) {
            throw graph_error("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
        }
    }

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Role>& roles() const noexcept { return roles_; }
    Role role(Vertex v) const { return roles_.at(v); }
    const std::optional<FamilySpec>& family() const noexcept { return family_; }

    bool has_edge(Vertex a, Vertex b) const {
        Edge e{std::min(a, b), std::max(a, b)};
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    std::vector<std::vector<Vertex>> adjacency() const {
        std::vector<std::vector<Vertex>> adj(vertex_count_);
        for (const auto& e : edges_) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        return adj;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<Role> roles_;
    std::optional<FamilySpec> family_;
};

namespace detail {

inline Graph build_complete_bipartite(std::size_t m, std::size_t n, FamilySpec spec, Role left, Role right) {
    std::vector<Edge> edges;
    edges.reserve(m * n);
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = 0; b < n; ++b) edges.push_back({a, m + b});
    std::vector<Role> roles(m + n, right);
    std::fill(roles.begin(), roles.begin() + static_cast<std::ptrdiff_t>(m), left);
    return Graph(m + n, std::move(edges), std::move(roles), std::move(spec));
}

} // namespace detail

inline Graph generate(const FamilySpec& spec) {
    spec.validate();
    const auto& p = spec.params;
    std::vector<Edge> edges;
    std::vector<Role> roles;
    std::size_t n_vertices = 0;

    switch (spec.family) {
    case Family::path: {
        n_vertices = p[0];
        for (Vertex i = 0; i + 1 < n_vertices; ++i) edges.push_back({i, i + 1});
        roles.assign(n_vertices, Role::path);
        break;
    }
    case Family::cycle: {
        n_vertices = p[0];
        for (Vertex i = 0; i < n_vertices; ++i) edges.push_back({i, (i + 1) % n_vertices});
        roles.assign(n_vertices, Role::rim);
        break;
    }
    case Family::complete: {
        n_vertices = p[0];
        for (Vertex a = 0; a < n_vertices; ++a)
            for (Vertex b = a + 1; b < n_vertices; ++b) edges.push_back({a, b});
        roles.assign(n_vertices, Role::generic);
        break;
    }
    case Family::complete_bipartite:
        return detail::build_complete_bipartite(p[0], p[1], spec, Role::generic, Role::generic);
    case Family::star: return detail::build_complete_bipartite(1, p[0], spec, Role::apex, Role::pendant);
    case Family::wheel: {
        const std::size_t rim = p[0];
        n_vertices = rim + 1;
        for (Vertex i = 0; i < rim; ++i) {
            edges.push_back({i, (i + 1) % rim});
            edges.push_back({i, rim});
        }
        roles.assign(n_vertices, Role::rim);
        roles[rim] = Role::hub;
        break;
    }
    case Family::bistar: {
        const std::size_t m = p[0], n = p[1];
        n_vertices = m + n + 2;
        edges.push_back({0, 1});
        for (Vertex i = 0; i < m; ++i) edges.push_back({0, 2 + i});
        for (Vertex i = 0; i < n; ++i) edges.push_back({1, 2 + m + i});
        roles.assign(n_vertices, Role::pendant);
        roles[0] = roles[1] = Role::apex;
        break;
    }
    case Family::triangular_snake: {
        const std::size_t n = p[0];
        n_vertices = 2 * n + 1;
        roles.assign(n_vertices, Role::blade_tip);
        for (Vertex i = 0; i <= n; ++i) roles[i] = Role::path;
        for (Vertex i = 0; i < n; ++i) {
            const Vertex tip = n + 1 + i;
            edges.push_back({i, i + 1});
            edges.push_back({i, tip});
            edges.push_back({i + 1, tip});
        }
        break;
    }
    case Family::friendship: {
        const std::size_t n = p[0];
        n_vertices = 2 * n + 1;
        roles.assign(n_vertices, Role::blade_tip);
        roles[0] = Role::apex;
        for (Vertex i = 1; i <= n; ++i) {
            edges.push_back({0, 2 * i - 1});
            edges.push_back({0, 2 * i});
            edges.push_back({2 * i - 1, 2 * i});
        }
        break;
    }
    case Family::jellyfish: {
        const std::size_t m1 = p[0], m2 = p[1];
        n_vertices = m1 + m2 + 4;
        edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
        for (Vertex i = 0; i < m1; ++i) edges.push_back({2, 4 + i});
        for (Vertex i = 0; i < m2; ++i) edges.push_back({3, 4 + m1 + i});
        roles.assign(n_vertices, Role::pendant);
        for (Vertex i = 0; i < 4; ++i) roles[i] = Role::internal;
        break;
    }
    }
    return Graph(n_vertices, std::move(edges), std::move(roles), spec);
}

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> back_map; ///< new id -> original id
};

/// Vertex-induced subgraph; kept vertices are renumbered 0.. in ascending
/// original order. Roles carry over; family metadata does not.
inline InducedSubgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
    std::vector<Vertex> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<Vertex, Vertex> forward;
    std::vector<Role> roles;
    for (Vertex v : sorted) {
        if (v >= g.vertex_count()) {
            throw graph_error("unknown vertex id " + std::to_string(v) + " (graph has " +
                              std::to_string(g.vertex_count()) + " vertices)");
        }
        forward.emplace(v, forward.size());
        roles.push_back(g.role(v));
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        auto a = forward.find(e.u), b = forward.find(e.v);
        if (a != forward.end() && b != forward.end()) edges.push_back({a->second, b->second});
    }
    return {Graph(sorted.size(), std::move(edges), std::move(roles)), std::move(sorted)};
}

/// Connectivity by breadth-first traversal. The empty graph counts as connected.
inline bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto adj = g.adjacency();
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (Vertex w : adj[queue[head]]) {
            if (!seen[w]) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return queue.size() == g.vertex_count();
}

} // namespace perrin_cordial
