// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "perrin_cordial/perrin_cordial.hpp"

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef PERRIN_CLI_PATH
#error "PERRIN_CLI_PATH must name the perrin-cordial executable"
#endif

using namespace perrin_cordial;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void fail(std::string why) {
        pass = false;
        notes.push_back(std::move(why));
    }
    void note(std::string what) { notes.push_back(std::move(what)); }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
    int id;
    std::string title;
    double budget_s; ///< wall-clock limit; 0 means none
    std::function<void(Outcome&)> body;
};

void check_sound(Outcome& out, const FamilySpec& spec, std::size_t& checked) {
    ++checked;
    const auto r = construct(spec);
    if (const auto* bad = std::get_if<Infeasible>(&r)) {
        std::ostringstream os;
        os << spec.label() << " not constructed (" << bad->reason << ")";
        if (spec.family == Family::jellyfish) {
            const Verdict v = decide_jellyfish_full(spec.params[0], spec.params[1]);
            os << "; full internal-parity scan: " << (v.feasible() ? "feasible" : "infeasible") << " after "
               << v.searched << " cases";
        }
        out.fail(os.str());
        return;
    }
    const auto& c = std::get<Constructed>(r);
    if (!is_valid(c.graph, c.labeling)) out.fail(spec.label() + ": " + validation_error(c.graph, c.labeling));
    if (!is_cordial(tally(c.graph, c.labeling))) out.fail(spec.label() + ": not cordial");
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(PERRIN_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Criterion> criteria() {
    std::vector<Criterion> list;

    list.push_back({1, "sequence fidelity P_0..P_6", 1.0, [](Outcome& out) {
                        const int want[] = {0, 3, 0, 2, 3, 2, 5};
                        for (Index i = 0; i < 7; ++i)
                            if (perrin_value(i) != want[i]) out.fail("P_" + std::to_string(i) + " wrong");
                    }});

    list.push_back({2, "even_count closed form = scan, n <= 10^4", 1.0, [](Outcome& out) {
                        for (Index n = 0; n <= 10000; ++n)
                            if (even_count(n) != even_count_scan(n)) {
                                out.fail("mismatch at n=" + std::to_string(n));
                                return;
                            }
                    }});

    list.push_back({3, "parity period 7 for 1 <= i <= 10^3", 0.0, [](Outcome& out) {
                        for (Index i = 1; i <= 1000; ++i)
                            if (perrin_parity(i) != perrin_parity(i + 7)) out.fail("i=" + std::to_string(i));
                    }});

    list.push_back({4, "constructor soundness grid", 60.0, [](Outcome& out) {
                        std::size_t checked = 0;
                        for (std::size_t n = 1; n <= 200; ++n) check_sound(out, FamilySpec::path(n), checked);
                        for (std::size_t n = 3; n <= 200; ++n)
                            if (n % 4 != 2) check_sound(out, FamilySpec::cycle(n), checked);
                        for (std::size_t n = 3; n <= 200; ++n) check_sound(out, FamilySpec::wheel(n), checked);
                        for (std::size_t n = 1; n <= 100; ++n)
                            if (n % 4 != 2) {
                                check_sound(out, FamilySpec::triangular_snake(n), checked);
                                check_sound(out, FamilySpec::friendship(n), checked);
                            }
                        const std::set<std::size_t> extra{28, 29, 30, 32, 36};
                        for (std::size_t sum = 2; sum <= 36; ++sum)
                            if (sum <= 26 || extra.count(sum))
                                for (std::size_t m = 1; m < sum; ++m)
                                    check_sound(out, FamilySpec::bistar(m, sum - m), checked);
                        for (std::size_t a = 0; a <= 50; ++a)
                            for (std::size_t b = 0; b <= 50; ++b) check_sound(out, FamilySpec::jellyfish(a, b), checked);
                        for (std::size_t n : {1, 2, 3, 4, 6, 36, 49, 62, 64, 66, 79, 81, 83})
                            check_sound(out, FamilySpec::complete(n), checked);
                        for (std::size_t n = 1; n < 120; n += 2)
                            for (std::size_t m = 2; m + n <= 120; m += 2)
                                if (m <= 6 * n + 26 && m != 6 * n + 22)
                                    check_sound(out, FamilySpec::complete_bipartite(m, n), checked);
                        out.note(std::to_string(checked) + " instances checked");
                    }});

    list.push_back({5, "mod-4 obstruction by exhaustive search", 0.0, [](Outcome& out) {
                        for (const auto& spec :
                             {FamilySpec::cycle(6), FamilySpec::cycle(10), FamilySpec::cycle(14),
                              FamilySpec::triangular_snake(2), FamilySpec::triangular_snake(6),
                              FamilySpec::friendship(2), FamilySpec::friendship(6)}) {
                            const auto t0 = Clock::now();
                            const Verdict v = decide_exhaustive(generate(spec));
                            const double s = seconds_since(t0);
                            if (v.feasible()) out.fail(spec.label() + " reported feasible");
                            if (s >= 5.0) out.fail(spec.label() + " took " + std::to_string(s) + " s");
                        }
                    }});

    list.push_back({6, "exhaustive oracle agrees with analytic deciders", 0.0, [](Outcome& out) {
                        for (std::size_t n = 1; n <= 13; ++n)
                            if (decide_exhaustive(generate(FamilySpec::complete(n))).feasible() !=
                                is_feasible(construct_complete(n)))
                                out.fail("K_" + std::to_string(n));
                        for (std::size_t m = 1; m <= 12; ++m)
                            for (std::size_t n = 1; m + n <= 13; ++n)
                                if (decide_exhaustive(generate(FamilySpec::complete_bipartite(m, n))).feasible() !=
                                    decide_bipartite(m, n).feasible())
                                    out.fail("K_{" + std::to_string(m) + "," + std::to_string(n) + "}");
                        for (std::size_t m = 1; m <= 10; ++m)
                            for (std::size_t n = 1; m + n <= 11; ++n)
                                if (decide_exhaustive(generate(FamilySpec::bistar(m, n))).feasible() !=
                                    decide_bistar_full(m, n).feasible())
                                    out.fail("B_{" + std::to_string(m) + "," + std::to_string(n) + "}");
                    }});

    list.push_back({7, "K_n anchors and list comparison, n in [1,100]", 0.0, [](Outcome& out) {
                        const Claim& claim = builtin_claim(Family::complete);
                        const auto rows = sweep(claim, grid_1d(1, 100));
                        auto tool = [&](std::size_t n) { return rows.at(n - 1).tool; };
                        if (tool(49) != ToolVerdict::feasible) {
                            out.fail("K_49 not feasible");
                        } else {
                            const auto t = tally(generate(FamilySpec::complete(49)), *rows[48].witness);
                            if (t.e0 != 588 || t.e1 != 588)
                                out.fail("K_49 tally " + std::to_string(t.e0) + "/" + std::to_string(t.e1));
                        }
                        for (std::size_t n : {36, 62, 64})
                            if (tool(n) != ToolVerdict::feasible) out.fail("K_" + std::to_string(n) + " not feasible");
                        for (std::size_t n : {5, 7})
                            if (tool(n) != ToolVerdict::infeasible) out.fail("K_" + std::to_string(n) + " not infeasible");
                        std::ofstream report("acceptance_complete_report.md");
                        write_markdown(report, claim, rows);
                        for (const auto& r : rows)
                            if (r.agree == std::optional<bool>(false))
                                out.note("list mismatch flagged: n=" + format_params(r.spec.params) + " list says " +
                                         std::string(to_string(r.paper)) + ", counts say " +
                                         std::string(to_string(r.tool)));
                        out.note("report: acceptance_complete_report.md");
                    }});

    list.push_back({8, "K_{m,n} block tally = (m-2p1)(n-2p2), m,n <= 12", 0.0, [](Outcome& out) {
                        for (std::size_t m = 1; m <= 12; ++m)
                            for (std::size_t n = 1; n <= 12; ++n) {
                                const Graph g = generate(FamilySpec::complete_bipartite(m, n));
                                for (std::size_t p1 = 0; p1 <= m; ++p1)
                                    for (std::size_t p2 = 0; p2 <= n; ++p2) {
                                        std::vector<Vertex> evens;
                                        for (Vertex v = 0; v < p1; ++v) evens.push_back(v);
                                        for (Vertex v = 0; v < p2; ++v) evens.push_back(m + v);
                                        const auto eps = tally(g, ParityPattern::with_evens(m + n, evens)).epsilon();
                                        const auto want = (std::int64_t(m) - 2 * std::int64_t(p1)) *
                                                          (std::int64_t(n) - 2 * std::int64_t(p2));
                                        if (eps != want) out.fail("m=" + std::to_string(m) + " n=" + std::to_string(n));
                                    }
                            }
                    }});

    list.push_back({9, "triangle and cycle odd-edge parity", 0.0, [](Outcome& out) {
                        for (std::size_t n = 3; n <= 12; ++n) {
                            const Graph c = generate(FamilySpec::cycle(n));
                            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                                ParityPattern p;
                                for (std::size_t v = 0; v < n; ++v)
                                    p.parities.push_back((bits >> v) & 1 ? Parity::odd : Parity::even);
                                const auto e1 = tally(c, p).e1;
                                if (e1 % 2 != 0) out.fail("C_" + std::to_string(n) + " odd e1");
                                if (n == 3 && e1 != 0 && e1 != 2) out.fail("triangle e1=" + std::to_string(e1));
                            }
                        }
                    }});

    list.push_back({10, "claims sweep over all ten families", 0.0, [](Outcome& out) {
                        SearchConfig cfg;
                        cfg.max_vertices = 24;
                        std::vector<ClaimCheckRow> all;
                        std::size_t expected_rows = 0, witnesses = 0;
                        for (const auto& claim : builtin_claims()) {
                            const Grid grid = default_grid(claim.family);
                            expected_rows += grid.size();
                            auto rows = sweep(claim, grid, cfg);
                            if (rows.size() != grid.size()) out.fail(std::string(to_string(claim.family)) + " row count");
                            for (const auto& r : rows) {
                                if (r.tool != ToolVerdict::feasible || !r.witness) continue;
                                ++witnesses;
                                const Graph g = generate(r.spec);
                                if (!is_valid(g, *r.witness) || !is_cordial(tally(g, *r.witness)))
                                    out.fail(r.spec.label() + " witness does not verify");
                            }
                            const auto s = summarize(rows);
                            out.note(std::string(to_string(claim.family)) + ": " + std::to_string(s.rows) + " rows, " +
                                     std::to_string(s.disagree) + " disagree, " + std::to_string(s.not_comparable) +
                                     " not comparable");
                            std::move(rows.begin(), rows.end(), std::back_inserter(all));
                        }
                        std::ostringstream csv;
                        write_csv(csv, all);
                        const std::string text = csv.str();
                        const auto lines = std::size_t(std::count(text.begin(), text.end(), '\n'));
                        if (lines != expected_rows + 1) out.fail("CSV has " + std::to_string(lines) + " lines");
                        std::ofstream("acceptance_claims.csv") << text;

                        bool s25 = false;
                        std::size_t b27 = 0, b40 = 0;
                        for (const auto& r : all) {
                            if (r.spec.family == Family::star && r.spec.params[0] == 25 && r.agree) {
                                s25 = true;
                                out.note("S_25: claimed " + std::string(to_string(r.paper)) + ", tool " +
                                         std::string(to_string(r.tool)) + ", agree " + std::string(format_agree(r.agree)));
                            }
                            if (r.spec.family == Family::bistar && r.agree) {
                                const auto sum = r.spec.params[0] + r.spec.params[1];
                                b27 += sum == 27;
                                b40 += sum == 40;
                            }
                        }
                        if (!s25) out.fail("S_25 row missing or not compared");
                        if (b27 != 26) out.fail("bistar m+n=27 rows: " + std::to_string(b27));
                        if (b40 != 39) out.fail("bistar m+n=40 rows: " + std::to_string(b40));
                        out.note(std::to_string(witnesses) + " witnesses re-verified; CSV: acceptance_claims.csv");
                    }});

    list.push_back({11, "CLI gen -> label -> verify, stable export-dot", 0.0, [](Outcome& out) {
                        if (int rc = run_cli("gen path 10 --out acc_path10.json"); rc != 0)
                            out.fail("gen exit " + std::to_string(rc));
                        if (int rc = run_cli("label path 10 --json acc_path10_label.json > /dev/null"); rc != 0)
                            out.fail("label exit " + std::to_string(rc));
                        if (int rc = run_cli("verify --graph acc_path10.json --labeling acc_path10_label.json > /dev/null");
                            rc != 0)
                            out.fail("verify exit " + std::to_string(rc));
                        const std::string dot_args = "export-dot --graph acc_path10.json --labeling acc_path10_label.json";
                        run_cli(dot_args + " --out acc_a.dot");
                        run_cli(dot_args + " --out acc_b.dot");
                        const std::string a = slurp("acc_a.dot"), b = slurp("acc_b.dot");
                        if (a.empty() || a != b) out.fail("export-dot output differs between runs");
                    }});

    return list;
}

} // namespace

int main() {
    int failed = 0;
    for (const auto& c : criteria()) {
        Outcome out;
        const auto t0 = Clock::now();
        try {
            c.body(out);
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double s = seconds_since(t0);
        if (c.budget_s > 0 && s >= c.budget_s) out.fail("exceeded " + std::to_string(c.budget_s) + " s budget");
        std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << s
                  << " s)\n";
        for (const auto& n : out.notes) std::cout << "      " << n << '\n';
        failed += !out.pass;
    }
    std::cout << (failed ? std::to_string(failed) + " criterion/criteria failed" : "all criteria passed") << '\n';
    return failed ? 1 : 0;
}
