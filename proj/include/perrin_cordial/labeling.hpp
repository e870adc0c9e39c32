#pragma once

/**
 * @file labeling.hpp
 * @brief Perrin labelings, induced edge labels, edge tallies and cordiality.
 *
 * A labeling of a graph with |V| vertices assigns each vertex a distinct
 * index from {0, ..., |V|}; exactly one index stays unused. Injectivity is on
 * indices, not values (P_0 = P_2 = 0 may appear together).
 *
 * Only parities matter for the edge labels, so most of the work happens on
 * ParityPattern. With S the set of even vertices:
 *
 *   e0 - e1 = |E| - 2 * cut(S)
 */

#include "perrin_cordial/graph.hpp"
#include "perrin_cordial/perrin.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace perrin_cordial {

class labeling_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PerrinLabeling {
    std::size_t domain_max = 0;
    std::map<Vertex, Index> assignment;

    friend bool operator==(const PerrinLabeling&, const PerrinLabeling&) = default;
};

struct ParityPattern {
    std::vector<Parity> parities;

    std::size_t size() const noexcept { return parities.size(); }
    Parity operator[](std::size_t i) const { return parities[i]; }

    std::size_t even_vertex_count() const noexcept {
        std::size_t n = 0;
        for (Parity p : parities) n += (p == Parity::even);
        return n;
    }

    ParityPattern complement() const {
        ParityPattern out{parities};
        for (auto& p : out.parities) p = flip(p);
        return out;
    }

    /// Pattern with the given vertices even and all others odd.
    static ParityPattern with_evens(std::size_t n, const std::vector<Vertex>& evens) {
        ParityPattern out{std::vector<Parity>(n, Parity::odd)};
        for (Vertex v : evens) out.parities.at(v) = Parity::even;
        return out;
    }

    friend bool operator==(const ParityPattern&, const ParityPattern&) = default;
};

struct EdgeTally {
    std::int64_t e0 = 0;
    std::int64_t e1 = 0;

    constexpr std::int64_t epsilon() const noexcept { return e0 - e1; }

    friend bool operator==(const EdgeTally&, const EdgeTally&) = default;
};

constexpr int induced_edge_label(Parity pu, Parity pv) noexcept { return pu == pv ? 0 : 1; }

inline EdgeTally tally(const Graph& g, const ParityPattern& pattern) {
    if (pattern.size() != g.vertex_count()) {
        throw labeling_error("parity pattern has " + std::to_string(pattern.size()) + " entries, graph has " +
                             std::to_string(g.vertex_count()) + " vertices");
    }
    EdgeTally t;
    for (const auto& e : g.edges()) {
        if (induced_edge_label(pattern[e.u], pattern[e.v]) == 0)
            ++t.e0;
        else
            ++t.e1;
    }
    return t;
}

constexpr bool is_cordial(const EdgeTally& t) noexcept {
    const auto eps = t.epsilon();
    return eps >= -1 && eps <= 1;
}

/// Empty when the labeling is valid for g; otherwise a description of the
/// first violation found.
inline std::string validation_error(const Graph& g, const PerrinLabeling& f) {
    const std::size_t n = g.vertex_count();
    if (f.domain_max != n) {
        return "domain_max " + std::to_string(f.domain_max) + " differs from vertex count " + std::to_string(n);
    }
    std::set<Index> used;
    for (const auto& [v, i] : f.assignment) {
        if (v >= n) return "vertex " + std::to_string(v) + " is not in the graph";
        if (i > f.domain_max) {
            return "vertex " + std::to_string(v) + " has index " + std::to_string(i) + " > domain_max " +
                   std::to_string(f.domain_max);
        }
        if (!used.insert(i).second) return "index " + std::to_string(i) + " is used more than once";
    }
    if (f.assignment.size() != n) {
        return std::to_string(n - f.assignment.size()) + " vertex/vertices left unlabeled";
    }
    return {};
}

inline bool is_valid(const Graph& g, const PerrinLabeling& f) { return validation_error(g, f).empty(); }

/// Per-vertex parity of the assigned indices. Requires an injective
/// assignment covering vertices 0..k-1; the range check against domain_max
/// belongs to is_valid.
inline ParityPattern to_parity(const PerrinLabeling& f) {
    ParityPattern out;
    out.parities.reserve(f.assignment.size());
    std::set<Index> used;
    Vertex expect = 0;
    for (const auto& [v, i] : f.assignment) {
        if (v != expect) throw labeling_error("vertex " + std::to_string(expect) + " is unlabeled");
        if (!used.insert(i).second) throw labeling_error("index " + std::to_string(i) + " is used more than once");
        out.parities.push_back(perrin_parity(i));
        ++expect;
    }
    return out;
}

inline EdgeTally tally(const Graph& g, const PerrinLabeling& f) { return tally(g, to_parity(f)); }

/// Even counts a labeling of an n-vertex graph can use: the unused index is
/// either even (E - 1 evens) or odd (E evens), E = even_count(n). Ordered
/// skip-even first.
inline std::vector<std::size_t> admissible_even_counts(std::size_t n) {
    const std::size_t e = even_count(n);
    std::vector<std::size_t> out;
    if (e >= 1 && e - 1 <= n) out.push_back(e - 1);
    if (e <= n) out.push_back(e);
    return out;
}

inline bool is_admissible(std::size_t n, std::size_t evens) {
    for (auto s : admissible_even_counts(n))
        if (s == evens) return true;
    return false;
}

class realization_error : public std::runtime_error {
public:
    enum class Kind { insufficient_even_labels, insufficient_odd_labels, length_mismatch };

    realization_error(Kind kind, std::size_t required, std::size_t available)
        : std::runtime_error(describe(kind, required, available)), kind_(kind), required_(required),
          available_(available) {}

    Kind kind() const noexcept { return kind_; }
    std::size_t required() const noexcept { return required_; }
    std::size_t available() const noexcept { return available_; }

private:
    static std::string describe(Kind kind, std::size_t required, std::size_t available) {
        std::ostringstream os;
        switch (kind) {
        case Kind::insufficient_even_labels: os << "insufficient even labels"; break;
        case Kind::insufficient_odd_labels: os << "insufficient odd labels"; break;
        case Kind::length_mismatch: os << "pattern length mismatch"; break;
        }
        os << ": required " << required << ", available " << available;
        return os.str();
    }

    Kind kind_;
    std::size_t required_;
    std::size_t available_;
};

/// Canonical labeling with the given parity pattern: even indices in
/// ascending order go to even vertices in vertex order, odd indices likewise.
inline PerrinLabeling realize(const Graph& g, const ParityPattern& pattern) {
    const std::size_t n = g.vertex_count();
    if (pattern.size() != n) {
        throw realization_error(realization_error::Kind::length_mismatch, n, pattern.size());
    }
    const auto evens = even_indices(n);
    const auto odds = odd_indices(n);
    const std::size_t want_even = pattern.even_vertex_count();
    if (want_even > evens.size()) {
        throw realization_error(realization_error::Kind::insufficient_even_labels, want_even, evens.size());
    }
    if (n - want_even > odds.size()) {
        throw realization_error(realization_error::Kind::insufficient_odd_labels, n - want_even, odds.size());
    }
    PerrinLabeling f{n, {}};
    std::size_t next_even = 0, next_odd = 0;
    for (Vertex v = 0; v < n; ++v) {
        f.assignment[v] = pattern[v] == Parity::even ? evens[next_even++] : odds[next_odd++];
    }
    return f;
}

} // namespace perrin_cordial
