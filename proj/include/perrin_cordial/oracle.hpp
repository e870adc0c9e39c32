#pragma once

/**
 * @file oracle.hpp
 * @brief Deciding Perrin cordiality: exhaustive search and analytic deciders.
 *
 * A labeling is determined up to tally by its set S of even vertices, and
 * e0 - e1 = |E| - 2 cut(S). With E = even_count(|V|) the admissible sizes
 * are |S| in {E - 1, E}, so the exhaustive decider enumerates at most
 * C(|V|, E - 1) + C(|V|, E) vertex subsets.
 *
 * Enumeration order (defines the canonical witness): size E - 1 first, then
 * size E; within a size, subsets as ascending vertex lists in lexicographic
 * order. The witness is the first feasible subset in that order, realized
 * with realize().
 */

#include "perrin_cordial/constructors.hpp"
#include "perrin_cordial/graph.hpp"
#include "perrin_cordial/labeling.hpp"
#include "perrin_cordial/perrin.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace perrin_cordial {

enum class VerdictTag { feasible, infeasible };

struct Verdict {
    VerdictTag tag = VerdictTag::infeasible;
    std::optional<PerrinLabeling> witness;
    std::uint64_t searched = 0;
    std::string reason;

    bool feasible() const noexcept { return tag == VerdictTag::feasible; }
};

struct SearchConfig {
    std::size_t max_vertices = 24;
    bool parallel = false;
    bool want_witness = true;

    static constexpr std::size_t hard_limit = 64;
};

class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

using Mask = std::uint64_t;

struct SubsetHit {
    std::vector<Vertex> subset;
};

/// Scans all k-subsets whose smallest element is `lead`, in lexicographic
/// order. Returns the first feasible subset. `abandon` is polled so a worker
/// can stop once a lexicographically smaller hit exists elsewhere.
template <typename Abandon>
std::optional<std::vector<Vertex>> scan_lead(const std::vector<Mask>& adj, std::size_t n, std::int64_t edges,
                                             std::size_t k, std::size_t lead, std::uint64_t& searched,
                                             Abandon&& abandon) {
    if (k == 0 || lead + k > n) return std::nullopt;
    std::vector<Vertex> c(k);
    c[0] = lead;
    for (std::size_t i = 1; i < k; ++i) c[i] = lead + i;
    while (true) {
        Mask s = 0;
        for (Vertex v : c) s |= Mask{1} << v;
        std::int64_t cut = 0;
        for (Vertex v : c) cut += std::popcount(adj[v] & ~s);
        ++searched;
        const std::int64_t eps = edges - 2 * cut;
        if (eps >= -1 && eps <= 1) return c;
        if ((searched & 0xFFFF) == 0 && abandon()) return std::nullopt;
        // Next combination with c[0] fixed.
        std::size_t i = k;
        while (i > 1 && c[i - 1] == n - k + (i - 1)) --i;
        if (i <= 1) return std::nullopt;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

inline std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= Mask{1} << e.v;
        adj[e.v] |= Mask{1} << e.u;
    }
    return adj;
}

inline std::optional<std::vector<Vertex>> search_size_sequential(const std::vector<Mask>& adj, std::size_t n,
                                                                 std::int64_t edges, std::size_t k,
                                                                 std::uint64_t& searched) {
    if (k == 0) {
        ++searched;
        if (edges <= 1) return std::vector<Vertex>{};
        return std::nullopt;
    }
    for (std::size_t lead = 0; lead + k <= n; ++lead) {
        if (auto hit = scan_lead(adj, n, edges, k, lead, searched, [] { return false; })) return hit;
    }
    return std::nullopt;
}

inline std::optional<std::vector<Vertex>> search_size_parallel(const std::vector<Mask>& adj, std::size_t n,
                                                               std::int64_t edges, std::size_t k,
                                                               std::uint64_t& searched) {
    if (k == 0 || k > n) return search_size_sequential(adj, n, edges, k, searched);
    const std::size_t leads = n - k + 1;
    std::vector<std::optional<std::vector<Vertex>>> hits(leads);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::uint64_t> total{0};
    auto worker = [&] {
        std::uint64_t local = 0;
        for (std::size_t lead; (lead = next.fetch_add(1)) < leads;) {
            if (lead > best.load()) continue;
            auto hit = scan_lead(adj, n, edges, k, lead, local, [&] { return best.load() < lead; });
            if (hit) {
                hits[lead] = std::move(hit);
                std::size_t cur = best.load();
                while (lead < cur && !best.compare_exchange_weak(cur, lead)) {
                }
            }
        }
        total += local;
    };
    const std::size_t threads = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), leads));
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    searched += total.load();
    // Least lead with a hit holds the lexicographically least subset.
    for (auto& h : hits)
        if (h) return std::move(h);
    return std::nullopt;
}

inline Verdict feasible_verdict(const Graph& g, const ParityPattern& pattern, bool want_witness,
                                std::uint64_t searched) {
    Verdict v;
    v.tag = VerdictTag::feasible;
    v.searched = searched;
    if (want_witness) v.witness = realize(g, pattern);
    return v;
}

} // namespace detail

inline Verdict decide_exhaustive(const Graph& g, const SearchConfig& cfg = {}) {
    const std::size_t n = g.vertex_count();
    const std::size_t cap = std::min(cfg.max_vertices, SearchConfig::hard_limit);
    if (n > cap) {
        throw capacity_error("graph has " + std::to_string(n) + " vertices, exhaustive search cap is " +
                             std::to_string(cap));
    }
    const auto adj = detail::adjacency_masks(g);
    const auto edges = static_cast<std::int64_t>(g.edge_count());
    std::uint64_t searched = 0;
    for (std::size_t k : admissible_even_counts(n)) {
        auto hit = cfg.parallel ? detail::search_size_parallel(adj, n, edges, k, searched)
                                : detail::search_size_sequential(adj, n, edges, k, searched);
        if (hit) return detail::feasible_verdict(g, ParityPattern::with_evens(n, *hit), cfg.want_witness, searched);
    }
    Verdict v;
    v.searched = searched;
    v.reason = "no admissible even-vertex set balances the edges";
    return v;
}

/// Complete bipartite K_{m,n}: scan (p1, p2) with e0 - e1 = (m - 2 p1)(n - 2 p2).
inline Verdict decide_bipartite(std::size_t m, std::size_t n) {
    const std::size_t total = m + n;
    std::uint64_t searched = 0;
    for (std::size_t s : admissible_even_counts(total)) {
        const std::size_t lo = s > n ? s - n : 0;
        for (std::size_t p1 = lo; p1 <= std::min(m, s); ++p1) {
            const std::size_t p2 = s - p1;
            ++searched;
            const std::int64_t eps = (std::int64_t(m) - 2 * std::int64_t(p1)) * (std::int64_t(n) - 2 * std::int64_t(p2));
            if (eps >= -1 && eps <= 1) {
                std::vector<Vertex> evens;
                for (Vertex v = 0; v < p1; ++v) evens.push_back(v);
                for (Vertex v = 0; v < p2; ++v) evens.push_back(m + v);
                return detail::feasible_verdict(generate(FamilySpec::complete_bipartite(m, n)),
                                                ParityPattern::with_evens(total, evens), true, searched);
            }
        }
    }
    Verdict v;
    v.searched = searched;
    v.reason = "no admissible (p1, p2) with |(m - 2 p1)(n - 2 p2)| <= 1";
    return v;
}

/// Bistar B_{m,n} over all four apex parities. The tally depends only on the
/// apex parities and the number of even pendants on each side.
inline Verdict decide_bistar_full(std::size_t m, std::size_t n) {
    const std::size_t total = m + n + 2;
    const std::int64_t edges = std::int64_t(m + n + 1);
    std::uint64_t searched = 0;
    for (std::size_t s : admissible_even_counts(total)) {
        for (int apex_u_even = 0; apex_u_even <= 1; ++apex_u_even) {
            for (int apex_v_even = 0; apex_v_even <= 1; ++apex_v_even) {
                const std::size_t apex_evens = std::size_t(apex_u_even + apex_v_even);
                if (s < apex_evens) continue;
                const std::size_t pend = s - apex_evens;
                const std::size_t lo = pend > n ? pend - n : 0;
                for (std::size_t p1 = lo; p1 <= std::min(m, pend); ++p1) {
                    const std::size_t p2 = pend - p1;
                    ++searched;
                    // Pendant edge is odd when its parity differs from the apex.
                    std::int64_t cut = apex_u_even != apex_v_even;
                    cut += apex_u_even ? std::int64_t(m - p1) : std::int64_t(p1);
                    cut += apex_v_even ? std::int64_t(n - p2) : std::int64_t(p2);
                    const std::int64_t eps = edges - 2 * cut;
                    if (eps < -1 || eps > 1) continue;
                    std::vector<Vertex> evens;
                    if (apex_u_even) evens.push_back(0);
                    if (apex_v_even) evens.push_back(1);
                    for (std::size_t i = 0; i < p1; ++i) evens.push_back(2 + i);
                    for (std::size_t i = 0; i < p2; ++i) evens.push_back(2 + m + i);
                    return detail::feasible_verdict(generate(FamilySpec::bistar(m, n)),
                                                    ParityPattern::with_evens(total, evens), true, searched);
                }
            }
        }
    }
    Verdict v;
    v.searched = searched;
    v.reason = "no apex parities and pendant split balance the edges";
    return v;
}

/// Jellyfish J(m1, m2) over all 16 parities of the internal vertices. Pendants
/// on one hub are interchangeable, so only their even counts matter.
inline Verdict decide_jellyfish_full(std::size_t m1, std::size_t m2) {
    const std::size_t total = m1 + m2 + 4;
    const std::int64_t edges = std::int64_t(m1 + m2 + 5);
    constexpr Edge internal_edges[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    std::uint64_t searched = 0;
    for (std::size_t s : admissible_even_counts(total)) {
        for (unsigned mask = 0; mask < 16; ++mask) {
            auto even = [mask](Vertex v) { return ((mask >> v) & 1U) != 0; };
            const std::size_t internal_evens = std::size_t(std::popcount(mask));
            if (s < internal_evens) continue;
            std::int64_t internal_cut = 0;
            for (const auto& e : internal_edges) internal_cut += even(e.u) != even(e.v);
            const std::size_t pend = s - internal_evens;
            const std::size_t lo = pend > m2 ? pend - m2 : 0;
            for (std::size_t k1 = lo; k1 <= std::min(m1, pend); ++k1) {
                const std::size_t k2 = pend - k1;
                ++searched;
                std::int64_t cut = internal_cut;
                cut += even(2) ? std::int64_t(m1 - k1) : std::int64_t(k1);
                cut += even(3) ? std::int64_t(m2 - k2) : std::int64_t(k2);
                const std::int64_t eps = edges - 2 * cut;
                if (eps < -1 || eps > 1) continue;
                std::vector<Vertex> evens;
                for (Vertex v = 0; v < 4; ++v)
                    if (even(v)) evens.push_back(v);
                for (std::size_t j = 0; j < k1; ++j) evens.push_back(4 + j);
                for (std::size_t j = 0; j < k2; ++j) evens.push_back(4 + m1 + j);
                return detail::feasible_verdict(generate(FamilySpec::jellyfish(m1, m2)),
                                                ParityPattern::with_evens(total, evens), true, searched);
            }
        }
    }
    Verdict v;
    v.searched = searched;
    v.reason = "no internal parities and pendant split balance the edges";
    return v;
}

/// Complete graph K_n from the even/odd counts alone.
inline Verdict decide_complete(std::size_t n) {
    std::uint64_t searched = 0;
    for (std::size_t s : admissible_even_counts(n)) {
        ++searched;
        const std::int64_t eps = complete_epsilon(std::int64_t(s), std::int64_t(n - s));
        if (eps >= -1 && eps <= 1) {
            std::vector<Vertex> evens;
            for (Vertex v = 0; v < s; ++v) evens.push_back(v);
            return detail::feasible_verdict(generate(FamilySpec::complete(n)), ParityPattern::with_evens(n, evens),
                                            true, searched);
        }
    }
    Verdict v;
    v.searched = searched;
    v.reason = "neither admissible even/odd split balances C(a,2) + C(b,2) against a b";
    return v;
}

} // namespace perrin_cordial
