#pragma once

// Independent reference implementations and random generators for tests.
// Nothing here calls into the library's search or sequence code.

#include "perrin_cordial/graph.hpp"
#include "perrin_cordial/labeling.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

namespace pc = perrin_cordial;

// Plain 64-bit recurrence, exact up to index ~ 250.
inline std::vector<std::uint64_t> perrin_u64(std::size_t upto) {
    std::vector<std::uint64_t> p{0, 3, 0, 2};
    while (p.size() <= upto) p.push_back(p[p.size() - 2] + p[p.size() - 3]);
    p.resize(upto + 1);
    return p;
}

inline bool index_even(std::size_t i) {
    static const auto table = perrin_u64(200);
    return table.at(i) % 2 == 0;
}

// Bichromatic edge count by direct scan over the edge list.
inline std::size_t cut_size(const pc::Graph& g, const std::vector<bool>& even) {
    std::size_t c = 0;
    for (const auto& e : g.edges()) c += even[e.u] != even[e.v];
    return c;
}

// Brute force over every injective map V -> {0..|V|}. Feasible iff some map
// is cordial. Usable up to about 8 vertices.
inline bool brute_force_feasible(const pc::Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return true;
    std::vector<std::size_t> idx(n + 1);
    std::iota(idx.begin(), idx.end(), 0);
    // A permutation of {0..n} is a labeling: the first n entries label the
    // vertices, the last one is the skipped index.
    do {
        std::vector<bool> even(n);
        for (std::size_t v = 0; v < n; ++v) even[v] = index_even(idx[v]);
        const auto c = static_cast<std::int64_t>(cut_size(g, even));
        const auto eps = static_cast<std::int64_t>(g.edge_count()) - 2 * c;
        if (eps >= -1 && eps <= 1) return true;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

inline pc::Graph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
    std::bernoulli_distribution coin(density);
    std::vector<pc::Edge> edges;
    for (pc::Vertex u = 0; u < n; ++u)
        for (pc::Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.push_back({u, v});
    return pc::Graph(n, std::move(edges));
}

inline pc::ParityPattern random_pattern(std::mt19937_64& rng, std::size_t n) {
    std::bernoulli_distribution coin(0.5);
    pc::ParityPattern p;
    for (std::size_t i = 0; i < n; ++i) p.parities.push_back(coin(rng) ? pc::Parity::even : pc::Parity::odd);
    return p;
}

inline pc::Graph permuted(const pc::Graph& g, const std::vector<pc::Vertex>& perm) {
    std::vector<pc::Edge> edges;
    for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
    return pc::Graph(g.vertex_count(), std::move(edges));
}

inline pc::PerrinLabeling labeling_of(const std::vector<std::size_t>& indices) {
    pc::PerrinLabeling f{indices.size(), {}};
    for (pc::Vertex v = 0; v < indices.size(); ++v) f.assignment[v] = indices[v];
    return f;
}

} // namespace testing_support
