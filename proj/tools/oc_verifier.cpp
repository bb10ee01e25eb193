#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "oddsym/bruhat_graph.hpp"
#include "oddsym/c1_operator.hpp"
#include "oddsym/chevalley.hpp"
#include "oddsym/partitions.hpp"
#include "oddsym/report.hpp"
#include "oddsym/spectrum.hpp"

// Command-line front end.  Exit codes: 0 when every requested verdict holds,
// 1 when a verdict fails (or the window policies disagree under --strict),
// 2 on invalid input.

namespace {

using nlohmann::json;
using namespace oddsym;

struct CommonArgs {
    int k = 0;
    int n = 0;
    std::string window = "standard";
    bool as_json = false;
};

void add_shape_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--k", args.k, "number of rows k")->required();
    cmd->add_option("--n", args.n, "half-dimension parameter n of IG(k, 2n+1)")->required();
    cmd->add_option("--window", args.window, "column window policy")
        ->check(CLI::IsMember({"standard", "paper-literal"}));
    cmd->add_flag("--json", args.as_json, "emit JSON");
}

std::string term_text(const ClassicalTerm& term) {
    std::ostringstream out;
    out << term.coefficient << " [X(" << term.mu.to_string() << ")]";
    return out.str();
}

int cmd_enumerate(const CommonArgs& args) {
    Shape shape = make_shape(args.k, args.n);
    Basis basis = Basis::enumerate(shape);
    if (args.as_json) {
        json out = {{"k", shape.k},
                    {"n", shape.n},
                    {"dimension", shape.dimension()},
                    {"fano_index", shape.fano_index()},
                    {"count", basis.size()}};
        json list = json::array();
        for (const auto& lambda : basis.elements()) list.push_back(lambda.parts());
        out["basis"] = list;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "IG(" << shape.k << "," << 2 * shape.n + 1 << "): dimension "
              << shape.dimension() << ", Fano index " << shape.fano_index() << ", "
              << basis.size() << " classes\n";
    for (const auto& lambda : basis.elements())
        std::cout << "  (" << lambda.to_string() << ")  weight " << lambda.weight() << '\n';
    return 0;
}

int cmd_chevalley(const CommonArgs& args, const std::string& partition) {
    Shape shape = make_shape(args.k, args.n);
    OddPartition lambda = parse_partition(shape, partition);
    auto expansion = chevalley_mult(shape, lambda, parse_policy(args.window));
    if (args.as_json) {
        json out = to_json(expansion);
        out["k"] = shape.k;
        out["n"] = shape.n;
        out["lambda"] = lambda.parts();
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "[X(1)] * [X(" << lambda.to_string() << ")] =\n";
    for (const auto& term : expansion.classical)
        std::cout << "  " << term_text(term) << "   (2^" << term.a << ")\n";
    for (const auto& term : expansion.quantum)
        std::cout << "  q [X(" << term.mu.to_string() << ")]   ("
                  << (term.kind == EdgeKind::quantum_star ? "star" : "star-star") << ")\n";
    if (expansion.classical.empty() && expansion.quantum.empty()) std::cout << "  0\n";
    return 0;
}

int cmd_graph(const CommonArgs& args, bool want_dot) {
    Shape shape = make_shape(args.k, args.n);
    C1Matrix c1 = build_c1_matrix(shape, parse_policy(args.window));
    QuantumBruhatGraph graph = build_graph(c1);
    bool connected = strongly_connected(graph);
    int p = connected ? period(graph) : 0;
    if (want_dot) {
        export_dot(graph, std::cout);
        return 0;
    }
    if (args.as_json) {
        json out = {{"k", shape.k},
                    {"n", shape.n},
                    {"vertices", graph.vertex_count()},
                    {"edges", graph.edge_count()},
                    {"strongly_connected", connected},
                    {"period", p},
                    {"fano_index", shape.fano_index()},
                    {"period_equals_fano_index", p == shape.fano_index()}};
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "vertices " << graph.vertex_count() << ", edges " << graph.edge_count()
              << ", strongly connected " << (connected ? "yes" : "no") << ", period " << p
              << " (Fano index " << shape.fano_index() << ")\n";
    return 0;
}

int cmd_positivity(const CommonArgs& args) {
    Shape shape = make_shape(args.k, args.n);
    C1Matrix c1 = build_c1_matrix(shape, parse_policy(args.window));
    auto report = verify_theorem_positive(c1);
    auto conjecture = verify_conjecture_t_positive(c1);
    bool ok = report.all() && conjecture.holds;
    if (args.as_json) {
        auto path_json = [](const PathWitness& w) {
            json path = json::array();
            for (const auto& p : w.path) path.push_back(p.parts());
            return json{{"from", w.from.parts()}, {"to", w.to.parts()}, {"path", path}};
        };
        json pairs = json::array();
        for (const auto& [from, to] : conjecture.failing_pairs)
            pairs.push_back({{"from", from.parts()}, {"to", to.parts()}});
        json out = {{"k", shape.k},
                    {"n", shape.n},
                    {"part_a", report.part_a},
                    {"part_b", report.part_b},
                    {"part_c", report.part_c},
                    {"witness_a", path_json(report.witness_a)},
                    {"witness_b", path_json(report.witness_b)},
                    {"witness_c", path_json(report.witness_c)},
                    {"conjecture_holds", conjecture.holds},
                    {"conjecture_failing_pairs", pairs}};
        std::cout << out.dump(2) << '\n';
        return ok ? 0 : 1;
    }
    std::cout << "point reachable from all: " << (report.part_a ? "yes" : "no")
              << " (worst source (" << report.witness_a.from.to_string() << "), "
              << report.witness_a.length() << " steps)\n";
    std::cout << "zero reachable from point: " << (report.part_b ? "yes" : "no") << " ("
              << report.witness_b.length() << " steps)\n";
    std::cout << "all reachable from zero: " << (report.part_c ? "yes" : "no")
              << " (worst target (" << report.witness_c.to.to_string() << "), "
              << report.witness_c.length() << " steps)\n";
    std::cout << "T entrywise positive: " << (conjecture.holds ? "yes" : "no") << '\n';
    return ok ? 0 : 1;
}

int cmd_chains(const CommonArgs& args, const std::string& kind, const std::string& target) {
    Shape shape = make_shape(args.k, args.n);
    WindowPolicy policy = parse_policy(args.window);
    ChevalleyChain chain;
    if (kind == "point-to-zero") {
        chain = chain_point_to_zero(shape, policy);
    } else if (kind == "zero-to") {
        if (target.empty()) throw std::invalid_argument("chains: --target required for zero-to");
        chain = chain_zero_to(shape, parse_partition(shape, target), policy);
    } else if (kind == "to-point") {
        if (target.empty()) throw std::invalid_argument("chains: --target required for to-point");
        chain = chain_to_point(shape, parse_partition(shape, target), policy);
    } else {
        throw std::invalid_argument("chains: unknown kind '" + kind + "'");
    }
    if (args.as_json) {
        std::cout << to_json(chain, shape).dump(2) << '\n';
        return 0;
    }
    for (std::size_t i = 0; i < chain.vertices.size(); ++i) {
        std::cout << "(" << chain.vertices[i].to_string() << ")";
        if (i + 1 < chain.vertices.size()) {
            bool quantum = chain.edge_kinds[i] != EdgeKind::cover;
            std::cout << " -" << (quantum ? "q" : "-") << "[" << chain.edge_coefficients[i]
                      << "]-> ";
        }
    }
    std::cout << "\nlength " << chain.length() << ", coefficient "
              << chain.coefficient_product() << ", q-degree " << chain.q_degree
              << ", tie-break topmost-row\n";
    return 0;
}

int cmd_spectrum(const CommonArgs& args, bool want_csv) {
    Shape shape = make_shape(args.k, args.n);
    C1Matrix c1 = build_c1_matrix(shape, parse_policy(args.window));
    auto eigs = eigenvalues(c1);
    auto power = perron_root(c1);
    if (want_csv) {
        std::cout << spectrum_csv(eigs);
        return 0;
    }
    auto report = verify_property_o(eigs, shape.fano_index(), power.value);
    if (args.as_json) {
        json out = to_json(report);
        out["power_iterations"] = power.iterations;
        out["power_converged"] = power.converged;
        std::cout << out.dump(2) << '\n';
        return 0;
    }
    std::cout << "delta0 " << report.delta0 << " (computed; power iteration, "
              << power.iterations << " iterations), max-modulus eigenvalues "
              << report.max_modulus_count << " of " << eigs.size() << ", Fano index "
              << shape.fano_index() << '\n';
    return 0;
}

int cmd_verify(const CommonArgs& args, const std::string& mode_text, double tol, bool strict) {
    Shape shape = make_shape(args.k, args.n);
    Tolerances tolerances;
    tolerances.modulus = tol;
    ShapeReport report = verify_shape(shape, parse_mode(mode_text), tolerances,
                                      /*with_positivity=*/false, parse_policy(args.window));
    if (args.as_json) {
        std::cout << to_json(report).dump(2) << '\n';
    } else {
        std::cout << "IG(" << shape.k << "," << 2 * shape.n + 1 << ") mode " << mode_text
                  << ": property O " << (report.property_o ? "holds" : "FAILS");
        if (report.has_exact)
            std::cout << "; exact: connected " << (report.strongly_connected_flag ? "yes" : "no")
                      << ", period " << report.period_value << "/" << report.fano_index;
        if (report.has_numeric)
            std::cout << "; numeric: delta0 " << report.numeric.delta0 << ", max-modulus "
                      << report.numeric.max_modulus_count << ", cond1 "
                      << (report.numeric.condition1 ? "yes" : "no") << ", cond2 "
                      << (report.numeric.condition2 ? "yes" : "no");
        std::cout << "; windows agree " << (report.windows_agree ? "yes" : "no") << '\n';
    }
    if (!report.property_o) return 1;
    if (strict && !report.windows_agree) return 1;
    return 0;
}

int cmd_sweep(int max_n, const std::string& mode_text, double tol, int jobs, bool strict,
              const std::string& window, bool as_json) {
    Tolerances tolerances;
    tolerances.modulus = tol;
    SweepReport sweep =
        run_sweep(max_n, parse_mode(mode_text), tolerances, jobs, parse_policy(window));
    if (as_json) {
        std::cout << to_json(sweep).dump(2) << '\n';
    } else {
        for (const auto& report : sweep.shapes)
            std::cout << "IG(" << report.k << "," << 2 * report.n + 1 << "): property O "
                      << (report.property_o ? "holds" : "FAILS") << ", period "
                      << report.period_value << "/" << report.fano_index << ", windows "
                      << (report.windows_agree ? "agree" : "DISAGREE") << ", "
                      << report.elapsed_ms << " ms\n";
        std::cout << (sweep.all_pass ? "all shapes pass" : "FAILURES present") << " ("
                  << sweep.shapes.size() << " shapes, " << sweep.elapsed_ms << " ms, jobs "
                  << sweep.jobs << ")\n";
    }
    if (!sweep.all_pass) return 1;
    if (strict && !sweep.all_windows_agree) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Property O verifier for odd symplectic Grassmannians IG(k, 2n+1)"};
    app.require_subcommand(1);

    CommonArgs enumerate_args;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list the Schubert basis");
    add_shape_options(enumerate_cmd, enumerate_args);

    CommonArgs chevalley_args;
    std::string chevalley_partition;
    auto* chevalley_cmd =
        app.add_subcommand("chevalley", "quantum Chevalley expansion of [X(1)] * [X(lambda)]");
    add_shape_options(chevalley_cmd, chevalley_args);
    chevalley_cmd->add_option("--partition", chevalley_partition, "lambda, e.g. \"3,-1\"")
        ->required();

    CommonArgs graph_args;
    bool graph_dot = false;
    auto* graph_cmd = app.add_subcommand("graph", "quantum Bruhat digraph summary");
    add_shape_options(graph_cmd, graph_args);
    graph_cmd->add_flag("--dot", graph_dot, "emit the digraph in Graphviz format on stdout");

    CommonArgs positivity_args;
    auto* positivity_cmd =
        app.add_subcommand("positivity", "reachability positivity of T = sum of c1 powers");
    add_shape_options(positivity_cmd, positivity_args);

    CommonArgs chains_args;
    std::string chain_kind;
    std::string chain_target;
    auto* chains_cmd = app.add_subcommand("chains", "explicit multiplication chains");
    add_shape_options(chains_cmd, chains_args);
    chains_cmd->add_option("--kind", chain_kind, "chain kind")
        ->required()
        ->check(CLI::IsMember({"point-to-zero", "zero-to", "to-point"}));
    chains_cmd->add_option("--target", chain_target, "tuple for zero-to / to-point");

    CommonArgs spectrum_args;
    bool spectrum_csv_out = false;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of the c1 matrix");
    add_shape_options(spectrum_cmd, spectrum_args);
    spectrum_cmd->add_flag("--csv", spectrum_csv_out, "emit re,im,modulus rows on stdout");

    CommonArgs verify_args;
    std::string verify_mode = "both";
    double verify_tol = 1e-8;
    bool verify_strict = false;
    auto* verify_cmd = app.add_subcommand("verify", "verify property O for one shape");
    add_shape_options(verify_cmd, verify_args);
    verify_cmd->add_option("--mode", verify_mode, "exact|numeric|both")
        ->check(CLI::IsMember({"exact", "numeric", "both"}));
    verify_cmd->add_option("--tol", verify_tol, "modulus grouping tolerance (relative)");
    verify_cmd->add_flag("--strict", verify_strict, "fail when window policies disagree");

    int sweep_max_n = 5;
    std::string sweep_mode = "both";
    double sweep_tol = 1e-8;
    int sweep_jobs = static_cast<int>(std::thread::hardware_concurrency());
    bool sweep_strict = false;
    std::string sweep_window = "standard";
    bool sweep_json = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "verify all shapes with k <= n <= max-n");
    sweep_cmd->add_option("--max-n", sweep_max_n, "largest n in the grid");
    sweep_cmd->add_option("--mode", sweep_mode, "exact|numeric|both")
        ->check(CLI::IsMember({"exact", "numeric", "both"}));
    sweep_cmd->add_option("--tol", sweep_tol, "modulus grouping tolerance (relative)");
    sweep_cmd->add_option("--jobs", sweep_jobs, "worker threads")
        ->envname("OC_VERIFIER_JOBS");
    sweep_cmd->add_flag("--strict", sweep_strict, "fail when window policies disagree");
    sweep_cmd->add_option("--window", sweep_window, "column window policy")
        ->check(CLI::IsMember({"standard", "paper-literal"}));
    sweep_cmd->add_flag("--json", sweep_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate_cmd->parsed()) return cmd_enumerate(enumerate_args);
        if (chevalley_cmd->parsed()) return cmd_chevalley(chevalley_args, chevalley_partition);
        if (graph_cmd->parsed()) return cmd_graph(graph_args, graph_dot);
        if (positivity_cmd->parsed()) return cmd_positivity(positivity_args);
        if (chains_cmd->parsed()) return cmd_chains(chains_args, chain_kind, chain_target);
        if (spectrum_cmd->parsed()) return cmd_spectrum(spectrum_args, spectrum_csv_out);
        if (verify_cmd->parsed())
            return cmd_verify(verify_args, verify_mode, verify_tol, verify_strict);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_max_n, sweep_mode, sweep_tol, sweep_jobs, sweep_strict,
                             sweep_window, sweep_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
