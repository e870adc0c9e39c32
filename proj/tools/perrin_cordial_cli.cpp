// perrin-cordial: command-line front end for the perrin_cordial library.
//
// Exit codes: 0 success / feasible / cordial, 1 infeasible / not cordial,
// 2 bad input or capability limit.

#include "perrin_cordial/perrin_cordial.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace pc = perrin_cordial;
namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_input = 2;

class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes to `path`, or to stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << text;
}

pc::FamilySpec parse_family(const std::string& name, const std::vector<std::size_t>& params) {
    auto f = pc::family_from_string(name);
    if (!f) throw input_error("unknown family '" + name + "'");
    pc::FamilySpec spec{*f, params};
    spec.validate();
    return spec;
}

// "a:b" or "a:b,c:d" -> grid; one interval per family parameter.
pc::Grid parse_range(pc::Family f, const std::string& text) {
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        const auto colon = part.find(':');
        try {
            if (colon == std::string::npos) {
                const std::size_t v = std::stoul(part);
                spans.emplace_back(v, v);
            } else {
                spans.emplace_back(std::stoul(part.substr(0, colon)), std::stoul(part.substr(colon + 1)));
            }
        } catch (const std::exception&) {
            throw input_error("bad range component '" + part + "'");
        }
        if (spans.back().first > spans.back().second) throw input_error("empty range '" + part + "'");
    }
    if (spans.size() != pc::param_count(f)) {
        throw input_error(std::string(pc::to_string(f)) + " takes " + std::to_string(pc::param_count(f)) +
                          " range(s), got " + std::to_string(spans.size()));
    }
    pc::Grid grid;
    if (spans.size() == 1) {
        grid = pc::grid_1d(spans[0].first, spans[0].second);
    } else {
        grid = pc::grid_2d(spans[0].first, spans[0].second, spans[1].first, spans[1].second);
    }
    const std::size_t lo = pc::param_minimum(f);
    std::erase_if(grid, [lo](const pc::Params& p) {
        for (auto v : p)
            if (v < lo) return true;
        return false;
    });
    return grid;
}

std::string witness_name(const pc::FamilySpec& spec) {
    std::string name(pc::to_string(spec.family));
    for (auto p : spec.params) name += "_" + std::to_string(p);
    return name + ".json";
}

int run_seq(std::size_t upto, bool parity_only) {
    std::cout << (parity_only ? "index\tparity\n" : "index\tvalue\tparity\n");
    for (pc::Index i = 0; i <= upto; ++i) {
        std::cout << i << '\t';
        if (!parity_only) std::cout << pc::perrin_value(i) << '\t';
        std::cout << pc::perrin_parity(i) << '\n';
    }
    return exit_ok;
}

int run_label(const pc::FamilySpec& spec, const std::string& json_out, const std::string& dot_out) {
    const auto result = pc::construct(spec);
    if (const auto* bad = std::get_if<pc::Infeasible>(&result)) {
        std::cout << spec.label() << ": no labeling (" << bad->reason << ", " << bad->candidates_tried
                  << " candidates)\n";
        return exit_negative;
    }
    const auto& c = std::get<pc::Constructed>(result);
    std::cout << spec.label() << ": " << c.scheme.scheme << (c.scheme.from_proof ? "" : " (scan)") << ", e0 "
              << c.tally.e0 << ", e1 " << c.tally.e1 << ", epsilon " << c.tally.epsilon() << '\n';
    if (!json_out.empty()) emit(json_out, pc::write_labeling(c.labeling));
    if (!dot_out.empty()) emit(dot_out, pc::export_dot(c.graph, c.labeling));
    return exit_ok;
}

int run_verify(const std::string& graph_path, const std::string& labeling_path) {
    const pc::Graph g = pc::read_graph(read_file(graph_path));
    const pc::PerrinLabeling f = pc::read_labeling(read_file(labeling_path));
    if (auto err = pc::validation_error(g, f); !err.empty()) {
        std::cout << "invalid: " << err << '\n';
        return exit_input;
    }
    const auto t = pc::tally(g, f);
    const bool ok = pc::is_cordial(t);
    std::cout << (ok ? "cordial" : "not cordial") << ": e0 " << t.e0 << ", e1 " << t.e1 << ", epsilon "
              << t.epsilon() << '\n';
    return ok ? exit_ok : exit_negative;
}

int run_decide(const std::string& graph_path, std::size_t max_n, bool witness, bool parallel,
               const std::string& out) {
    const pc::Graph g = pc::read_graph(read_file(graph_path));
    if (max_n > 24) {
        std::cerr << "warning: --max-n " << max_n << " exceeds 24; the search may take a long time\n";
    }
    pc::SearchConfig cfg;
    cfg.max_vertices = max_n;
    cfg.parallel = parallel;
    cfg.want_witness = witness;
    const pc::Verdict v = pc::decide_exhaustive(g, cfg);
    std::cout << (v.feasible() ? "feasible" : "infeasible") << " (" << v.searched << " subsets searched)";
    if (!v.reason.empty()) std::cout << ": " << v.reason;
    std::cout << '\n';
    if (witness && v.witness) emit(out, pc::write_labeling(*v.witness));
    return v.feasible() ? exit_ok : exit_negative;
}

struct SweepOptions {
    std::string family;
    std::string range;
    std::string format = "csv";
    std::string out;
    std::string witness_dir;
    std::size_t max_n = 24;
};

int run_sweep(const SweepOptions& o) {
    if (o.format != "csv" && o.format != "md") throw input_error("--format must be csv or md");
    std::vector<pc::Family> families;
    if (o.family == "all") {
        if (!o.range.empty()) throw input_error("--range needs a single family");
        families.assign(std::begin(pc::all_families), std::end(pc::all_families));
    } else {
        auto f = pc::family_from_string(o.family);
        if (!f) throw input_error("unknown family '" + o.family + "'");
        families.push_back(*f);
    }
    if (!o.witness_dir.empty()) fs::create_directories(o.witness_dir);

    pc::SearchConfig cfg;
    cfg.max_vertices = o.max_n;
    std::ostringstream report;
    std::vector<pc::ClaimCheckRow> all_rows;
    for (pc::Family f : families) {
        const pc::Claim& claim = pc::builtin_claim(f);
        const pc::Grid grid = o.range.empty() ? pc::default_grid(f) : parse_range(f, o.range);
        auto rows = pc::sweep(claim, grid, cfg);
        if (!o.witness_dir.empty()) {
            for (auto& r : rows) {
                if (!r.witness) continue;
                r.witness_file = (fs::path(o.witness_dir) / witness_name(r.spec)).string();
                emit(r.witness_file, pc::write_labeling(*r.witness));
            }
        }
        const auto s = pc::summarize(rows);
        std::cerr << pc::to_string(f) << ": " << s.rows << " rows, " << s.agree << " agree, " << s.disagree
                  << " disagree, " << s.not_comparable << " not comparable\n";
        if (o.format == "md") pc::write_markdown(report, claim, rows);
        std::move(rows.begin(), rows.end(), std::back_inserter(all_rows));
    }
    if (o.format == "csv") pc::write_csv(report, all_rows);
    emit(o.out, report.str());
    return exit_ok;
}

int run_export_dot(const std::string& graph_path, const std::string& labeling_path, const std::string& out) {
    const pc::Graph g = pc::read_graph(read_file(graph_path));
    const pc::PerrinLabeling f = pc::read_labeling(read_file(labeling_path));
    emit(out, pc::export_dot(g, f));
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perrin cordial labelings: construct, verify, decide, sweep"};
    app.require_subcommand(1);

    std::size_t upto = 20;
    bool parity_only = false;
    auto* seq = app.add_subcommand("seq", "Print Perrin values and parities as TSV");
    seq->add_option("--upto", upto, "Last index")->required();
    seq->add_flag("--parity", parity_only, "Print parities only");

    std::string family;
    std::vector<std::size_t> params;
    std::string out;
    auto* gen = app.add_subcommand("gen", "Generate a family graph as JSON");
    gen->add_option("family", family, "Family name")->required();
    gen->add_option("params", params, "Family parameters");
    gen->add_option("--out", out, "Output file (default stdout)");

    std::string json_out, dot_out;
    auto* label = app.add_subcommand("label", "Construct a Perrin cordial labeling for a family graph");
    label->add_option("family", family, "Family name")->required();
    label->add_option("params", params, "Family parameters");
    label->add_option("--json", json_out, "Write the labeling as JSON");
    label->add_option("--dot", dot_out, "Write a DOT drawing");

    std::string graph_path, labeling_path;
    auto* verify = app.add_subcommand("verify", "Check a labeling for validity and cordiality");
    verify->add_option("--graph", graph_path, "Graph JSON")->required();
    verify->add_option("--labeling", labeling_path, "Labeling JSON")->required();

    std::size_t max_n = 24;
    bool witness = false, parallel = false;
    auto* decide = app.add_subcommand("decide", "Decide feasibility by exhaustive search");
    decide->add_option("--graph", graph_path, "Graph JSON")->required();
    decide->add_option("--max-n", max_n, "Vertex cap (at most 64)");
    decide->add_flag("--witness", witness, "Emit a witness labeling");
    decide->add_flag("--parallel", parallel, "Search with all hardware threads");
    decide->add_option("--out", out, "Witness output file (default stdout)");

    SweepOptions sw;
    auto* sweep = app.add_subcommand("sweep", "Check built-in family claims over a parameter grid");
    sweep->add_option("family", sw.family, "Family name or 'all'")->required();
    sweep->add_option("--range", sw.range, "a:b or a:b,c:d (default: family grid)");
    sweep->add_option("--format", sw.format, "csv or md")->check(CLI::IsMember({"csv", "md"}));
    sweep->add_option("--out", sw.out, "Report file (default stdout)");
    sweep->add_option("--witness-dir", sw.witness_dir, "Directory for witness labelings");
    sweep->add_option("--max-n", sw.max_n, "Exhaustive search vertex cap");

    auto* dot = app.add_subcommand("export-dot", "Render a labeled graph as Graphviz DOT");
    dot->add_option("--graph", graph_path, "Graph JSON")->required();
    dot->add_option("--labeling", labeling_path, "Labeling JSON")->required();
    dot->add_option("--out", out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_input;
    }

    try {
        if (*seq) return run_seq(upto, parity_only);
        if (*gen) {
            emit(out, pc::write_graph(pc::generate(parse_family(family, params))));
            return exit_ok;
        }
        if (*label) return run_label(parse_family(family, params), json_out, dot_out);
        if (*verify) return run_verify(graph_path, labeling_path);
        if (*decide) return run_decide(graph_path, max_n, witness, parallel, out);
        if (*sweep) return run_sweep(sw);
        if (*dot) return run_export_dot(graph_path, labeling_path, out);
    } catch (const pc::capacity_error& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
    }
    return exit_input;
}
