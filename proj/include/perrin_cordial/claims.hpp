#pragma once

/**
 * @file claims.hpp
 * @brief Stated family characterizations as data, and sweeps that check
 *        them against the deciders.
 *
 * A claim maps family parameters to a stated verdict (feasible, infeasible
 * or unknown when the statement is sufficient-only). A sweep decides each
 * grid point with the strongest applicable decider:
 *
 *   analytic     count-determined families (complete, complete bipartite,
 *                star, bistar, jellyfish), and the mod-4 parity obstruction for
 *                cycles / snakes / friendship graphs beyond the search cap
 *   exhaustive   any graph within the vertex cap
 *   constructor  success proves feasibility; failure proves nothing
 *
 * Disagreements are recorded in the rows, never raised.
 */

#include "perrin_cordial/constructors.hpp"
#include "perrin_cordial/graph.hpp"
#include "perrin_cordial/labeling.hpp"
#include "perrin_cordial/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace perrin_cordial {

enum class PaperVerdict { feasible, infeasible, unknown };
enum class ToolVerdict { feasible, infeasible, undecided };
enum class Decider { exhaustive, analytic, constructor, none };

constexpr std::string_view to_string(PaperVerdict v) noexcept {
    switch (v) {
    case PaperVerdict::feasible: return "true";
    case PaperVerdict::infeasible: return "false";
    case PaperVerdict::unknown: return "unknown";
    }
    return "unknown";
}

constexpr std::string_view to_string(ToolVerdict v) noexcept {
    switch (v) {
    case ToolVerdict::feasible: return "true";
    case ToolVerdict::infeasible: return "false";
    case ToolVerdict::undecided: return "undecided";
    }
    return "undecided";
}

constexpr std::string_view to_string(Decider d) noexcept {
    switch (d) {
    case Decider::exhaustive: return "exhaustive";
    case Decider::analytic: return "analytic";
    case Decider::constructor: return "constructor";
    case Decider::none: return "none";
    }
    return "none";
}

using Params = std::vector<std::size_t>;
using Grid = std::vector<Params>;

struct Claim {
    Family family;
    std::string statement;
    std::function<PaperVerdict(const Params&)> predicate;
};

struct ClaimCheckRow {
    FamilySpec spec;
    PaperVerdict paper = PaperVerdict::unknown;
    ToolVerdict tool = ToolVerdict::undecided;
    Decider decider = Decider::none;
    std::optional<bool> agree;
    std::optional<PerrinLabeling> witness;
    std::string witness_file;

    friend bool operator==(const ClaimCheckRow&, const ClaimCheckRow&) = default;
};

namespace detail {

inline PaperVerdict stated(bool feasible) { return feasible ? PaperVerdict::feasible : PaperVerdict::infeasible; }

/// Sum bound of the both-odd complete bipartite statement, by (m + n) mod 7.
constexpr std::size_t both_odd_bound(std::size_t sum) noexcept {
    constexpr std::size_t bounds[7] = {28, 22, 30, 38, 32, 40, 34};
    return bounds[sum % 7];
}

inline PaperVerdict complete_bipartite_statement(std::size_t m, std::size_t n) {
    const std::size_t big = std::max(m, n), small = std::min(m, n);
    if (small % 2 == 0) return PaperVerdict::feasible;
    if (big % 2 == 0) return stated(big <= 6 * small + 26 && big != 6 * small + 22);
    // Both odd: sufficient condition only.
    return m + n <= both_odd_bound(m + n) ? PaperVerdict::feasible : PaperVerdict::unknown;
}

inline PaperVerdict bistar_statement(std::size_t sum) {
    static const std::set<std::size_t> extra{28, 29, 30, 32, 36};
    return stated((sum > 1 && sum <= 26) || extra.count(sum) != 0);
}

} // namespace detail

/// One claim per family.
inline std::vector<Claim> builtin_claims() {
    using detail::stated;
    std::vector<Claim> claims;
    claims.push_back({Family::path, "every path P_n is Perrin cordial",
                      [](const Params&) { return PaperVerdict::feasible; }});
    claims.push_back({Family::cycle, "C_n is Perrin cordial iff n != 2 (mod 4)",
                      [](const Params& p) { return stated(p[0] % 4 != 2); }});
    claims.push_back({Family::complete, "K_n is Perrin cordial iff n in {1,2,3,4,6,36,49,62,64,66,79,81,83}",
                      [](const Params& p) {
                          static const std::set<std::size_t> list{1, 2, 3, 4, 6, 36, 49, 62, 64, 66, 79, 81, 83};
                          return stated(list.count(p[0]) != 0);
                      }});
    claims.push_back({Family::complete_bipartite,
                      "K_{m,n}: cordial when the smaller side is even; for m even, n odd iff m <= 6n+26 and "
                      "m != 6n+22; for m, n odd if m+n <= {28,22,30,38,32,40,34}[(m+n) mod 7]",
                      [](const Params& p) { return detail::complete_bipartite_statement(p[0], p[1]); }});
    claims.push_back({Family::star, "S_n is Perrin cordial for n in {1,...,32} \\ {25}",
                      [](const Params& p) { return stated(p[0] >= 1 && p[0] <= 32 && p[0] != 25); }});
    claims.push_back({Family::wheel, "every wheel W_n is Perrin cordial",
                      [](const Params&) { return PaperVerdict::feasible; }});
    claims.push_back({Family::bistar, "B_{m,n} is Perrin cordial iff 1 < m+n <= 26 or m+n in {28,29,30,32,36}",
                      [](const Params& p) { return detail::bistar_statement(p[0] + p[1]); }});
    claims.push_back({Family::triangular_snake, "TS_n is Perrin cordial iff n != 2 (mod 4)",
                      [](const Params& p) { return stated(p[0] % 4 != 2); }});
    claims.push_back({Family::friendship, "F_n is Perrin cordial iff n != 2 (mod 4)",
                      [](const Params& p) { return stated(p[0] % 4 != 2); }});
    claims.push_back({Family::jellyfish, "every jellyfish J_{m1,m2} is Perrin cordial",
                      [](const Params&) { return PaperVerdict::feasible; }});
    return claims;
}

inline const Claim& builtin_claim(Family f) {
    static const std::vector<Claim> claims = builtin_claims();
    for (const auto& c : claims)
        if (c.family == f) return c;
    throw parameter_error("no built-in claim for family");
}

inline Grid grid_1d(std::size_t lo, std::size_t hi) {
    Grid g;
    for (std::size_t n = lo; n <= hi; ++n) g.push_back({n});
    return g;
}

inline Grid grid_2d(std::size_t lo1, std::size_t hi1, std::size_t lo2, std::size_t hi2) {
    Grid g;
    for (std::size_t a = lo1; a <= hi1; ++a)
        for (std::size_t b = lo2; b <= hi2; ++b) g.push_back({a, b});
    return g;
}

/// Desk-scale grid per family.
inline Grid default_grid(Family f) {
    switch (f) {
    case Family::path: return grid_1d(1, 60);
    case Family::cycle: return grid_1d(3, 60);
    case Family::complete: return grid_1d(1, 100);
    case Family::complete_bipartite: return grid_2d(1, 40, 1, 40);
    case Family::star: return grid_1d(1, 60);
    case Family::wheel: return grid_1d(3, 40);
    case Family::bistar: {
        Grid g;
        for (std::size_t m = 1; m < 40; ++m)
            for (std::size_t n = 1; m + n <= 40; ++n) g.push_back({m, n});
        return g;
    }
    case Family::triangular_snake:
    case Family::friendship: return grid_1d(1, 30);
    case Family::jellyfish: return grid_2d(0, 20, 0, 20);
    }
    return {};
}

struct Decision {
    ToolVerdict verdict = ToolVerdict::undecided;
    Decider decider = Decider::none;
    std::optional<PerrinLabeling> witness;
};

namespace detail {

inline Decision from_verdict(Verdict v, Decider d) {
    return {v.feasible() ? ToolVerdict::feasible : ToolVerdict::infeasible, d, std::move(v.witness)};
}

inline std::size_t family_vertex_count(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::path:
    case Family::cycle:
    case Family::complete: return p[0];
    case Family::complete_bipartite: return p[0] + p[1];
    case Family::star:
    case Family::wheel: return p[0] + 1;
    case Family::bistar: return p[0] + p[1] + 2;
    case Family::triangular_snake:
    case Family::friendship: return 2 * p[0] + 1;
    case Family::jellyfish: return p[0] + p[1] + 4;
    }
    return 0;
}

} // namespace detail

/// Strongest available decision for one family instance.
inline Decision decide_family(const FamilySpec& spec, const SearchConfig& cfg = {}) {
    spec.validate();
    const auto& p = spec.params;
    switch (spec.family) {
    case Family::complete: return detail::from_verdict(decide_complete(p[0]), Decider::analytic);
    case Family::complete_bipartite: return detail::from_verdict(decide_bipartite(p[0], p[1]), Decider::analytic);
    // K_{1,n} and the star share their vertex numbering.
    case Family::star: return detail::from_verdict(decide_bipartite(1, p[0]), Decider::analytic);
    case Family::bistar: return detail::from_verdict(decide_bistar_full(p[0], p[1]), Decider::analytic);
    case Family::jellyfish: return detail::from_verdict(decide_jellyfish_full(p[0], p[1]), Decider::analytic);
    default: break;
    }
    const std::size_t n = detail::family_vertex_count(spec);
    if (n <= std::min(cfg.max_vertices, SearchConfig::hard_limit)) {
        SearchConfig c = cfg;
        c.want_witness = true;
        return detail::from_verdict(decide_exhaustive(generate(spec), c), Decider::exhaustive);
    }
    const bool mod4_family = spec.family == Family::cycle || spec.family == Family::triangular_snake ||
                             spec.family == Family::friendship;
    if (mod4_family && p[0] % 4 == 2) return {ToolVerdict::infeasible, Decider::analytic, std::nullopt};
    auto built = construct(spec);
    if (auto* c = std::get_if<Constructed>(&built)) {
        return {ToolVerdict::feasible, Decider::constructor, std::move(c->labeling)};
    }
    return {};
}

inline std::vector<ClaimCheckRow> sweep(const Claim& claim, Grid grid, const SearchConfig& cfg = {}) {
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    std::vector<ClaimCheckRow> rows;
    rows.reserve(grid.size());
    for (const auto& params : grid) {
        ClaimCheckRow row;
        row.spec = FamilySpec{claim.family, params};
        row.paper = claim.predicate(params);
        Decision d = decide_family(row.spec, cfg);
        row.tool = d.verdict;
        row.decider = d.decider;
        row.witness = std::move(d.witness);
        if (row.paper != PaperVerdict::unknown && row.tool != ToolVerdict::undecided) {
            row.agree = (row.paper == PaperVerdict::feasible) == (row.tool == ToolVerdict::feasible);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string format_params(const Params& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? ";" : "") + std::to_string(p[i]);
    return out;
}

inline std::string_view format_agree(const std::optional<bool>& a) { return !a ? "n/a" : (*a ? "yes" : "no"); }

inline void write_csv(std::ostream& os, const std::vector<ClaimCheckRow>& rows) {
    os << "family,params,paper_verdict,tool_verdict,decider,agree,witness_file\n";
    for (const auto& r : rows) {
        os << to_string(r.spec.family) << ',' << format_params(r.spec.params) << ',' << to_string(r.paper) << ','
           << to_string(r.tool) << ',' << to_string(r.decider) << ',' << format_agree(r.agree) << ','
           << r.witness_file << '\n';
    }
}

struct AgreementSummary {
    std::size_t rows = 0;
    std::size_t agree = 0;
    std::size_t disagree = 0;
    std::size_t not_comparable = 0;
};

inline AgreementSummary summarize(const std::vector<ClaimCheckRow>& rows) {
    AgreementSummary s;
    for (const auto& r : rows) {
        ++s.rows;
        if (!r.agree)
            ++s.not_comparable;
        else if (*r.agree)
            ++s.agree;
        else
            ++s.disagree;
    }
    return s;
}

/// Bistar rows grouped by m + n: does some split, or every split, admit a
/// labeling.
struct BistarSumRow {
    std::size_t sum = 0;
    PaperVerdict paper = PaperVerdict::unknown;
    std::size_t splits = 0;
    std::size_t feasible_splits = 0;
    std::size_t odd_apex_splits = 0; ///< splits the both-apexes-odd scheme labels
    bool any_feasible() const noexcept { return feasible_splits > 0; }
    bool all_feasible() const noexcept { return splits > 0 && feasible_splits == splits; }
};

inline std::vector<BistarSumRow> aggregate_bistar_by_sum(const std::vector<ClaimCheckRow>& rows) {
    std::map<std::size_t, BistarSumRow> by_sum;
    for (const auto& r : rows) {
        if (r.spec.family != Family::bistar || r.tool == ToolVerdict::undecided) continue;
        const std::size_t sum = r.spec.params[0] + r.spec.params[1];
        auto& agg = by_sum[sum];
        agg.sum = sum;
        agg.paper = r.paper;
        ++agg.splits;
        agg.feasible_splits += r.tool == ToolVerdict::feasible;
        agg.odd_apex_splits += is_feasible(construct_bistar_odd_apexes(r.spec.params[0], r.spec.params[1]));
    }
    std::vector<BistarSumRow> out;
    for (auto& [_, v] : by_sum) out.push_back(v);
    return out;
}

inline void write_markdown(std::ostream& os, const Claim& claim, const std::vector<ClaimCheckRow>& rows) {
    const auto s = summarize(rows);
    os << "## " << to_string(claim.family) << "\n\n";
    os << "Claim: " << claim.statement << "\n\n";
    os << "Rows: " << s.rows << ", agree: " << s.agree << ", disagree: " << s.disagree
       << ", not comparable: " << s.not_comparable << "\n\n";
    os << "| params | claimed | tool | decider | agree | witness |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& r : rows) {
        os << "| " << format_params(r.spec.params) << " | " << to_string(r.paper) << " | " << to_string(r.tool)
           << " | " << to_string(r.decider) << " | " << format_agree(r.agree) << " | " << r.witness_file << " |\n";
    }
    if (claim.family == Family::bistar) {
        os << "\n### bistar by m+n\n\n";
        os << "| m+n | claimed | some split | every split | odd-apex scheme splits |\n|---|---|---|---|---|\n";
        for (const auto& a : aggregate_bistar_by_sum(rows)) {
            os << "| " << a.sum << " | " << to_string(a.paper) << " | " << (a.any_feasible() ? "true" : "false")
               << " | " << (a.all_feasible() ? "true" : "false") << " | " << a.odd_apex_splits << "/" << a.splits
               << " |\n";
        }
    }
    os << '\n';
}

} // namespace perrin_cordial
