// sombor: compute degree-based graph indices, check the inequality catalog
// with tightness classification, and run brute-force extremal searches.
//
// Exit codes: 0 ok; 1 a checked inequality came back violated (or an
// asserted extremal characterization did not match); 2 usage, parse or I/O
// problems; 3 domain errors (isolated vertices, pendant vertices with a
// negative exponent, ...).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sombor/extremal.hpp"
#include "sombor/graph_io.hpp"
#include "sombor/indices.hpp"
#include "sombor/inequalities.hpp"
#include "sombor/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct OutputOptions {
    std::string format = "json";
    std::string path;  // empty: stdout
    bool no_timestamp = false;
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Report format: json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--output,-o", out.path, "Write the report here instead of stdout");
    cmd->add_flag("--no-timestamp", out.no_timestamp,
                  "Omit the timestamp so identical runs give identical bytes");
}

void write_report(const OutputOptions& out, const std::string& body) {
    if (out.path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw sombor::ParseError("cannot open '" + out.path + "' for writing");
    f << body;
}

sombor::Invocation make_invocation(int argc, char** argv, const OutputOptions& out) {
    sombor::Invocation inv;
    for (int i = 0; i < argc; ++i) inv.argv.emplace_back(argv[i]);
    if (!out.no_timestamp) inv.timestamp = sombor::current_utc_timestamp();
    return inv;
}

struct GraphInput {
    std::vector<std::string> inline_g6;
    std::string path;
};

void add_graph_input_flags(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--g6", in.inline_g6, "Inline graph6 string (repeatable)");
    cmd->add_option("--input,-i", in.path,
                    "Graph file: one graph6 per line, or an edge list (first line n, then 'u v')");
}

std::vector<sombor::Graph> load_input(const GraphInput& in) {
    std::vector<sombor::Graph> graphs;
    for (const std::string& g6 : in.inline_g6) graphs.push_back(sombor::parse_graph6(g6));
    if (!in.path.empty()) {
        auto from_file = sombor::load_graphs_from_file(in.path);
        graphs.insert(graphs.end(), from_file.begin(), from_file.end());
    }
    if (graphs.empty()) throw sombor::ParseError("no input graphs (use --g6 or --input)");
    return graphs;
}

sombor::IndexSpec make_spec(const std::string& name, std::optional<double> alpha,
                            std::optional<double> beta) {
    const auto family = sombor::IndexSpec::family_from_string(name);
    if (!family) throw CLI::ValidationError("--index", "unknown index family '" + name + "'");
    sombor::IndexSpec spec;
    spec.family = *family;
    if (spec.uses_alpha()) {
        if (!alpha) throw CLI::ValidationError("--alpha", "index " + name + " needs --alpha");
        spec.alpha = *alpha;
    }
    if (spec.uses_beta()) {
        if (!beta) throw CLI::ValidationError("--beta", "index " + name + " needs --beta");
        spec.beta = *beta;
    }
    return spec;
}

std::vector<sombor::Graph> default_corpus() {
    // all connected graphs on 2..5 vertices, one per isomorphism class
    std::vector<sombor::Graph> corpus;
    for (int n = 2; n <= 5; ++n) {
        auto reps = sombor::enumerate_class({n, sombor::GraphClassKind::connected});
        corpus.insert(corpus.end(), reps.begin(), reps.end());
    }
    return corpus;
}

int run_compute(const GraphInput& input, const std::vector<std::string>& index_names,
                std::optional<double> alpha, std::optional<double> beta, const OutputOptions& out,
                const sombor::Invocation& inv) {
    const auto graphs = load_input(input);
    std::vector<sombor::ComputeRow> rows;
    for (const sombor::Graph& g : graphs) {
        const std::string g6 = sombor::to_graph6(g);
        for (const std::string& name : index_names) {
            const sombor::IndexSpec spec = make_spec(name, alpha, beta);
            std::string note;
            if (const auto kv = sombor::kernel_view(spec); kv && !kv->reduced && kv->alpha == 0.0)
                note = "alpha = 0 is outside the hypotheses of the inequality catalog";
            try {
                rows.push_back({g6, spec, sombor::evaluate_index(g, spec), note});
            } catch (const sombor::DomainError& e) {
                throw sombor::DomainError("graph " + g6 + ": " + e.what());
            }
        }
    }
    if (out.format == "csv") write_report(out, sombor::compute_report_csv(rows));
    else if (out.format == "text") write_report(out, sombor::compute_report_text(rows));
    else write_report(out, sombor::compute_report_json(rows, inv));
    return kExitOk;
}

int emit_suite_report(const sombor::SuiteReport& report, const OutputOptions& out,
                      const sombor::Invocation& inv) {
    if (out.format == "csv") write_report(out, sombor::suite_report_csv(report));
    else if (out.format == "text") write_report(out, sombor::suite_report_text(report));
    else write_report(out, sombor::suite_report_json(report, inv));
    return report.count(sombor::Verdict::violated) == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-based graph indices: computation, inequality checking, extremal search"};
    app.require_subcommand(1);

    // compute
    GraphInput compute_input;
    std::vector<std::string> compute_indices;
    std::optional<double> compute_alpha, compute_beta;
    OutputOptions compute_out;
    CLI::App* compute = app.add_subcommand("compute", "Evaluate indices on input graphs");
    add_graph_input_flags(compute, compute_input);
    compute->add_option("--index", compute_indices, "Index family (repeatable)")->required();
    compute->add_option("--alpha", compute_alpha, "alpha for parameterized families");
    compute->add_option("--beta", compute_beta, "beta for parameterized families");
    add_output_flags(compute, compute_out);

    // check
    GraphInput check_input;
    std::string check_theorem;
    std::optional<double> c_alpha, c_beta, c_lambda, c_mu, c_p;
    std::string check_variant = "both";
    OutputOptions check_out;
    CLI::App* check = app.add_subcommand("check", "Run one catalog entry at one parameter point");
    add_graph_input_flags(check, check_input);
    check->add_option("--theorem", check_theorem, "Catalog entry name")->required();
    check->add_option("--alpha", c_alpha, "alpha");
    check->add_option("--beta", c_beta, "beta");
    check->add_option("--lambda", c_lambda, "lambda");
    check->add_option("--mu", c_mu, "mu");
    check->add_option("--p", c_p, "p");
    check->add_option("--variant", check_variant, "sharp-bound variant: printed, per-edge or both")
        ->check(CLI::IsMember({"printed", "per-edge", "both"}));
    add_output_flags(check, check_out);

    // suite
    std::string suite_corpus, suite_grid;
    bool suite_corrupt = false;
    OutputOptions suite_out;
    CLI::App* suite = app.add_subcommand("suite", "Run the whole catalog over a corpus and a grid");
    suite->add_option("--corpus", suite_corpus,
                      "Corpus file (default: all connected graphs on 2..5 vertices)");
    suite->add_option("--grid", suite_grid, "Parameter grid file (default: built-in grid)");
    suite->add_flag("--inject-violation", suite_corrupt,
                    "Testing aid: corrupt one checker to prove violations are caught")
        ->group("");  // hidden
    add_output_flags(suite, suite_out);

    // extremal
    int ex_n = 0;
    std::string ex_class = "all", ex_index = "SO";
    std::optional<double> ex_alpha, ex_beta;
    bool ex_min = false, ex_max = false, ex_assert = false;
    OutputOptions ex_out;
    CLI::App* extremal = app.add_subcommand("extremal", "Brute-force optimum over a graph class");
    extremal->add_option("--n", ex_n, "Vertex count (<= 7)")->required();
    extremal->add_option("--class", ex_class,
                         "all, connected, no-pendant or connected-no-pendant");
    extremal->add_option("--index", ex_index, "Index family (default SO)");
    extremal->add_option("--alpha", ex_alpha, "alpha");
    extremal->add_option("--beta", ex_beta, "beta");
    extremal->add_flag("--min", ex_min, "Minimize");
    extremal->add_flag("--max", ex_max, "Maximize");
    extremal->add_flag("--assert-theorem", ex_assert,
                       "Compare the optimizer set against the proved characterization; "
                       "exit 1 on mismatch");
    add_output_flags(extremal, ex_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute)
            return run_compute(compute_input, compute_indices, compute_alpha, compute_beta,
                               compute_out, make_invocation(argc, argv, compute_out));

        if (*check) {
            const auto id = sombor::theorem_from_string(check_theorem);
            if (!id) {
                std::cerr << "unknown catalog entry '" << check_theorem << "'\n";
                return kExitUsage;
            }
            const auto need = [&](const std::optional<double>& v, const char* name) {
                if (!v) throw sombor::ParseError(std::string("--") + name + " is required for " +
                                                 check_theorem);
                return *v;
            };
            sombor::SuiteReport report;
            const auto graphs = load_input(check_input);
            report.graphs = graphs.size();
            for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
                const sombor::Graph& g = graphs[gi];
                std::vector<sombor::CheckResult> rows;
                using sombor::TheoremId;
                switch (*id) {
                    case TheoremId::ka_power_chain:
                        rows = sombor::check_ka_power_chain(g, need(c_alpha, "alpha"),
                                                            need(c_beta, "beta"),
                                                            need(c_lambda, "lambda"));
                        break;
                    case TheoremId::reduced_ka_power_chain:
                        rows = sombor::check_reduced_ka_power_chain(g, need(c_alpha, "alpha"),
                                                                    need(c_beta, "beta"),
                                                                    need(c_lambda, "lambda"));
                        break;
                    case TheoremId::so_alpha_chain:
                        rows = sombor::check_so_alpha_chain(g, need(c_alpha, "alpha"), need(c_mu, "mu"));
                        break;
                    case TheoremId::so_alpha_vs_zagreb:
                        rows = sombor::check_so_alpha_vs_zagreb(g, need(c_alpha, "alpha"));
                        break;
                    case TheoremId::modified_sombor_vs_banhatti:
                        rows = {sombor::check_modified_sombor_vs_banhatti(g)};
                        break;
                    case TheoremId::ka_vs_variable_zagreb:
                        rows = {sombor::check_ka_vs_variable_zagreb(g, need(c_alpha, "alpha"),
                                                                    need(c_beta, "beta"))};
                        break;
                    case TheoremId::sombor_vs_forgotten:
                        rows = {sombor::check_sombor_vs_forgotten(g)};
                        break;
                    case TheoremId::holder_product_chain:
                        rows = sombor::check_holder_product_chain(g, need(c_alpha, "alpha"),
                                                                  need(c_beta, "beta"),
                                                                  need(c_mu, "mu"), need(c_p, "p"));
                        break;
                    case TheoremId::holder_edge_count_bound:
                        rows = {sombor::check_holder_edge_count_bound(
                            g, need(c_alpha, "alpha"), need(c_mu, "mu"), need(c_p, "p"))};
                        break;
                    case TheoremId::sombor_product_bounds:
                        rows = sombor::check_sombor_product_bounds(g);
                        break;
                    case TheoremId::so_alpha_zagreb_sharp:
                    case TheoremId::sombor_zagreb_sharp: {
                        const auto run = [&](bool per_edge) {
                            return *id == TheoremId::so_alpha_zagreb_sharp
                                       ? sombor::check_so_alpha_zagreb_sharp(
                                             g, need(c_alpha, "alpha"), per_edge)
                                       : sombor::check_sombor_zagreb_sharp(g, per_edge);
                        };
                        if (check_variant == "printed") rows = run(false);
                        else if (check_variant == "per-edge") rows = run(true);
                        else {
                            rows = run(false);
                            for (auto& r : run(true))
                                if (r.case_index == 2) rows.push_back(std::move(r));
                        }
                        break;
                    }
                    case TheoremId::sombor_zagreb_isi:
                        rows = sombor::check_sombor_isi_bounds(g);
                        break;
                }
                const std::string g6 = sombor::to_graph6(g);
                for (auto& r : rows)
                    report.rows.push_back({static_cast<int>(gi), g6, std::move(r)});
            }
            return emit_suite_report(report, check_out, make_invocation(argc, argv, check_out));
        }

        if (*suite) {
            const auto corpus =
                suite_corpus.empty() ? default_corpus() : sombor::load_graphs_from_file(suite_corpus);
            const auto grid = suite_grid.empty() ? sombor::ParameterGrid::defaults()
                                                 : sombor::load_grid_from_file(suite_grid);
            sombor::SuiteOptions options;
            options.corrupt_checker = suite_corrupt;
            const auto report = sombor::run_suite(corpus, grid, options);
            return emit_suite_report(report, suite_out, make_invocation(argc, argv, suite_out));
        }

        if (*extremal) {
            if (ex_min == ex_max) {
                std::cerr << "pass exactly one of --min / --max\n";
                return kExitUsage;
            }
            const sombor::IndexSpec spec = make_spec(ex_index, ex_alpha, ex_beta);
            const auto kind = sombor::class_kind_from_string(ex_class);
            if (!kind) {
                std::cerr << "unknown class '" << ex_class << "'\n";
                return kExitUsage;
            }
            const auto report = sombor::optimize({ex_n, *kind}, spec, ex_max, ex_assert);
            const auto inv = make_invocation(argc, argv, ex_out);
            if (ex_out.format == "text") {
                write_report(ex_out, sombor::extremal_report_text(report));
            } else if (ex_out.format == "csv") {
                std::string csv = "graph,value\n";
                for (const std::string& g6 : report.optimizers)
                    csv += g6 + "," + sombor::format_double(report.optimum) + "\n";
                write_report(ex_out, csv);
            } else {
                write_report(ex_out, sombor::extremal_report_json(report, inv));
            }
            if (ex_assert && report.theorem && !report.theorem->matched) return kExitViolation;
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const sombor::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const sombor::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitUsage;
}
