#include "oddsym/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <nlohmann/json.hpp>

namespace oddsym {

using nlohmann::json;

VerifyMode parse_mode(const std::string& text) {
    if (text == "exact") return VerifyMode::exact;
    if (text == "numeric") return VerifyMode::numeric;
    if (text == "both") return VerifyMode::both;
    throw std::invalid_argument("mode: expected exact|numeric|both, got '" + text + "'");
}

std::string mode_name(VerifyMode mode) {
    switch (mode) {
        case VerifyMode::exact: return "exact";
        case VerifyMode::numeric: return "numeric";
        default: return "both";
    }
}

std::string policy_name(WindowPolicy policy) {
    return policy == WindowPolicy::standard ? "standard" : "paper-literal";
}

WindowPolicy parse_policy(const std::string& text) {
    if (text == "standard") return WindowPolicy::standard;
    if (text == "paper-literal") return WindowPolicy::truncated;
    throw std::invalid_argument("window: expected standard|paper-literal, got '" + text + "'");
}

namespace {

std::vector<int> as_vector(const OddPartition& p) { return p.parts(); }

WitnessReport witness_report(const PathWitness& w) {
    WitnessReport out;
    out.from = as_vector(w.from);
    out.to = as_vector(w.to);
    for (const auto& p : w.path) out.path.push_back(as_vector(p));
    return out;
}

std::string kind_name(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::cover: return "cover";
        case EdgeKind::quantum_star: return "quantum-star";
        default: return "quantum-star-star";
    }
}

} // namespace

ShapeReport verify_shape(const Shape& shape, VerifyMode mode, Tolerances tolerances,
                         bool with_positivity, WindowPolicy policy) {
    auto start = std::chrono::steady_clock::now();

    ShapeReport report;
    report.k = shape.k;
    report.n = shape.n;
    report.dimension = shape.dimension();
    report.fano_index = shape.fano_index();
    report.window_policy = policy_name(policy);

    C1Matrix c1 = build_c1_matrix(shape, policy);
    report.basis_size = c1.size();

    auto audit = audit_window_policies(shape);
    report.windows_agree = audit.identical;
    for (const auto& [from, to] : audit.differing)
        report.window_disagreements.emplace_back(from.parts(), to.parts());

    // Graph route: cheap, so it always runs; the mode decides what counts
    // toward the verdict.
    QuantumBruhatGraph graph = build_graph(c1);
    auto scc = strongly_connected_components(graph);
    report.has_exact = true;
    report.scc_count = scc.count;
    report.strongly_connected_flag = scc.count <= 1;
    report.period_value = report.strongly_connected_flag ? period(graph) : 0;
    report.exact_ok =
        report.strongly_connected_flag && report.period_value == shape.fano_index();

    if (mode != VerifyMode::exact) {
        report.has_numeric = true;
        auto eigs = eigenvalues(c1);
        auto power = perron_root(c1);
        report.power_delta0 = power.value;
        report.power_iterations = power.iterations;
        report.power_converged = power.converged;
        double qr_delta0 = 0.0;
        for (const auto& e : eigs) qr_delta0 = std::max(qr_delta0, std::abs(e));
        report.delta0_route_gap =
            qr_delta0 > 0.0 ? std::abs(power.value - qr_delta0) / qr_delta0 : 0.0;

        report.numeric = verify_property_o(eigs, shape.fano_index(), power.value, tolerances);
        report.numeric.k = shape.k;
        report.numeric.n = shape.n;
        report.numeric.exact_verdict = report.exact_ok;
        report.numeric_ok = report.numeric.condition1 && report.numeric.condition2 &&
                            report.power_converged;
        report.paths_agree = report.exact_ok == report.numeric_ok;
        report.numeric.paths_agree = report.paths_agree;
    }

    if (with_positivity) {
        report.has_positivity = true;
        auto positive = verify_theorem_positive(c1);
        report.positivity.part_a = positive.part_a;
        report.positivity.part_b = positive.part_b;
        report.positivity.part_c = positive.part_c;
        report.positivity.witness_a = witness_report(positive.witness_a);
        report.positivity.witness_b = witness_report(positive.witness_b);
        report.positivity.witness_c = witness_report(positive.witness_c);
        auto conjecture = verify_conjecture_t_positive(c1);
        report.positivity.conjecture_holds = conjecture.holds;
        for (const auto& [from, to] : conjecture.failing_pairs)
            report.positivity.conjecture_failing_pairs.emplace_back(from.parts(), to.parts());
    }

    switch (mode) {
        case VerifyMode::exact: report.property_o = report.exact_ok; break;
        case VerifyMode::numeric: report.property_o = report.numeric_ok; break;
        case VerifyMode::both:
            report.property_o = report.exact_ok && report.numeric_ok && report.paths_agree;
            break;
    }

    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

SweepReport run_sweep(int max_n, VerifyMode mode, Tolerances tolerances, int jobs,
                      WindowPolicy policy) {
    auto start = std::chrono::steady_clock::now();
    if (max_n < 1) throw std::invalid_argument("sweep: max n must be at least 1");

    std::vector<Shape> shapes;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) shapes.push_back(make_shape(k, n));

    SweepReport sweep;
    sweep.max_n = max_n;
    sweep.mode = mode_name(mode);
    sweep.jobs = std::clamp(jobs, 1, static_cast<int>(shapes.size()));
    sweep.shapes.resize(shapes.size());

    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= shapes.size()) return;
            sweep.shapes[i] = verify_shape(shapes[i], mode, tolerances,
                                           /*with_positivity=*/true, policy);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < sweep.jobs; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();

    sweep.all_pass = true;
    sweep.all_windows_agree = true;
    for (const auto& shape_report : sweep.shapes) {
        sweep.all_pass = sweep.all_pass && shape_report.property_o;
        sweep.all_windows_agree = sweep.all_windows_agree && shape_report.windows_agree;
    }
    sweep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return sweep;
}

namespace {

json complex_list(const std::vector<std::complex<double>>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(json::array({v.real(), v.imag()}));
    return out;
}

std::vector<std::complex<double>> complex_list_from(const json& j) {
    std::vector<std::complex<double>> out;
    for (const auto& item : j)
        out.emplace_back(item.at(0).get<double>(), item.at(1).get<double>());
    return out;
}

json pair_list(const std::vector<std::pair<std::vector<int>, std::vector<int>>>& pairs) {
    json out = json::array();
    for (const auto& [from, to] : pairs) out.push_back({{"from", from}, {"to", to}});
    return out;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> pair_list_from(const json& j) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
    for (const auto& item : j)
        out.emplace_back(item.at("from").get<std::vector<int>>(),
                         item.at("to").get<std::vector<int>>());
    return out;
}

json witness_json(const WitnessReport& w) {
    return {{"from", w.from}, {"to", w.to}, {"path", w.path}};
}

WitnessReport witness_from(const json& j) {
    WitnessReport w;
    w.from = j.at("from").get<std::vector<int>>();
    w.to = j.at("to").get<std::vector<int>>();
    w.path = j.at("path").get<std::vector<std::vector<int>>>();
    return w;
}

} // namespace

json to_json(const PropertyOReport& report) {
    return {{"k", report.k},
            {"n", report.n},
            {"fano_index", report.fano_index},
            {"delta0", report.delta0},
            {"delta0_provenance", report.delta0_provenance},
            {"eigenvalues", complex_list(report.eigenvalues)},
            {"max_modulus_count", report.max_modulus_count},
            {"condition1", report.condition1},
            {"condition2", report.condition2},
            {"exact_verdict", report.exact_verdict},
            {"paths_agree", report.paths_agree},
            {"tol_modulus", report.tolerances.modulus},
            {"tol_roots", report.tolerances.roots}};
}

PropertyOReport property_o_from_json(const json& j) {
    PropertyOReport report;
    report.k = j.at("k").get<int>();
    report.n = j.at("n").get<int>();
    report.fano_index = j.at("fano_index").get<int>();
    report.delta0 = j.at("delta0").get<double>();
    report.delta0_provenance = j.at("delta0_provenance").get<std::string>();
    report.eigenvalues = complex_list_from(j.at("eigenvalues"));
    report.max_modulus_count = j.at("max_modulus_count").get<int>();
    report.condition1 = j.at("condition1").get<bool>();
    report.condition2 = j.at("condition2").get<bool>();
    report.exact_verdict = j.at("exact_verdict").get<bool>();
    report.paths_agree = j.at("paths_agree").get<bool>();
    report.tolerances.modulus = j.at("tol_modulus").get<double>();
    report.tolerances.roots = j.at("tol_roots").get<double>();
    return report;
}

json to_json(const ShapeReport& report) {
    json exact = nullptr;
    if (report.has_exact)
        exact = {{"strongly_connected", report.strongly_connected_flag},
                 {"scc_count", report.scc_count},
                 {"period", report.period_value},
                 {"verdict", report.exact_ok}};
    json numeric = nullptr;
    if (report.has_numeric)
        numeric = {{"report", to_json(report.numeric)},
                   {"power_delta0", report.power_delta0},
                   {"power_iterations", report.power_iterations},
                   {"power_converged", report.power_converged},
                   {"delta0_route_gap", report.delta0_route_gap},
                   {"verdict", report.numeric_ok}};
    json positivity = nullptr;
    if (report.has_positivity)
        positivity = {{"part_a", report.positivity.part_a},
                      {"part_b", report.positivity.part_b},
                      {"part_c", report.positivity.part_c},
                      {"witness_a", witness_json(report.positivity.witness_a)},
                      {"witness_b", witness_json(report.positivity.witness_b)},
                      {"witness_c", witness_json(report.positivity.witness_c)},
                      {"conjecture_holds", report.positivity.conjecture_holds},
                      {"conjecture_failing_pairs",
                       pair_list(report.positivity.conjecture_failing_pairs)}};
    return {{"k", report.k},
            {"n", report.n},
            {"dimension", report.dimension},
            {"fano_index", report.fano_index},
            {"basis_size", report.basis_size},
            {"window_policy", report.window_policy},
            {"windows_agree", report.windows_agree},
            {"window_disagreements", pair_list(report.window_disagreements)},
            {"exact", exact},
            {"numeric", numeric},
            {"positivity", positivity},
            {"paths_agree", report.paths_agree},
            {"property_o", report.property_o},
            {"elapsed_ms", report.elapsed_ms}};
}

ShapeReport shape_report_from_json(const json& j) {
    ShapeReport report;
    report.k = j.at("k").get<int>();
    report.n = j.at("n").get<int>();
    report.dimension = j.at("dimension").get<int>();
    report.fano_index = j.at("fano_index").get<int>();
    report.basis_size = j.at("basis_size").get<int>();
    report.window_policy = j.at("window_policy").get<std::string>();
    report.windows_agree = j.at("windows_agree").get<bool>();
    report.window_disagreements = pair_list_from(j.at("window_disagreements"));
    if (!j.at("exact").is_null()) {
        const auto& e = j.at("exact");
        report.has_exact = true;
        report.strongly_connected_flag = e.at("strongly_connected").get<bool>();
        report.scc_count = e.at("scc_count").get<int>();
        report.period_value = e.at("period").get<int>();
        report.exact_ok = e.at("verdict").get<bool>();
    }
    if (!j.at("numeric").is_null()) {
        const auto& m = j.at("numeric");
        report.has_numeric = true;
        report.numeric = property_o_from_json(m.at("report"));
        report.power_delta0 = m.at("power_delta0").get<double>();
        report.power_iterations = m.at("power_iterations").get<int>();
        report.power_converged = m.at("power_converged").get<bool>();
        report.delta0_route_gap = m.at("delta0_route_gap").get<double>();
        report.numeric_ok = m.at("verdict").get<bool>();
    }
    if (!j.at("positivity").is_null()) {
        const auto& p = j.at("positivity");
        report.has_positivity = true;
        report.positivity.part_a = p.at("part_a").get<bool>();
        report.positivity.part_b = p.at("part_b").get<bool>();
        report.positivity.part_c = p.at("part_c").get<bool>();
        report.positivity.witness_a = witness_from(p.at("witness_a"));
        report.positivity.witness_b = witness_from(p.at("witness_b"));
        report.positivity.witness_c = witness_from(p.at("witness_c"));
        report.positivity.conjecture_holds = p.at("conjecture_holds").get<bool>();
        report.positivity.conjecture_failing_pairs =
            pair_list_from(p.at("conjecture_failing_pairs"));
    }
    report.paths_agree = j.at("paths_agree").get<bool>();
    report.property_o = j.at("property_o").get<bool>();
    report.elapsed_ms = j.at("elapsed_ms").get<double>();
    return report;
}

json to_json(const SweepReport& report) {
    json shapes = json::array();
    for (const auto& shape_report : report.shapes) shapes.push_back(to_json(shape_report));
    return {{"max_n", report.max_n},
            {"mode", report.mode},
            {"jobs", report.jobs},
            {"shapes", shapes},
            {"all_pass", report.all_pass},
            {"all_windows_agree", report.all_windows_agree},
            {"elapsed_ms", report.elapsed_ms}};
}

SweepReport sweep_report_from_json(const json& j) {
    SweepReport report;
    report.max_n = j.at("max_n").get<int>();
    report.mode = j.at("mode").get<std::string>();
    report.jobs = j.at("jobs").get<int>();
    for (const auto& item : j.at("shapes"))
        report.shapes.push_back(shape_report_from_json(item));
    report.all_pass = j.at("all_pass").get<bool>();
    report.all_windows_agree = j.at("all_windows_agree").get<bool>();
    report.elapsed_ms = j.at("elapsed_ms").get<double>();
    return report;
}

json to_json(const ChevalleyChain& chain, const Shape& shape) {
    json vertices = json::array();
    for (const auto& v : chain.vertices) vertices.push_back(v.parts());
    json kinds = json::array();
    for (auto kind : chain.edge_kinds) kinds.push_back(kind_name(kind));
    return {{"k", shape.k},
            {"n", shape.n},
            {"vertices", vertices},
            {"edge_kinds", kinds},
            {"edge_coefficients", chain.edge_coefficients},
            {"length", chain.length()},
            {"q_degree", chain.q_degree},
            {"coefficient_product", chain.coefficient_product()},
            {"tie_break", "topmost-row"}};
}

json to_json(const ChevalleyExpansion& expansion) {
    json classical = json::array();
    for (const auto& term : expansion.classical)
        classical.push_back(
            {{"mu", term.mu.parts()}, {"a", term.a}, {"coefficient", term.coefficient}});
    json quantum = json::array();
    for (const auto& term : expansion.quantum)
        quantum.push_back({{"mu", term.mu.parts()},
                           {"kind", kind_name(term.kind)},
                           {"coefficient", 1},
                           {"q_exponent", 1}});
    return {{"classical", classical}, {"quantum", quantum}};
}

std::string spectrum_csv(const std::vector<std::complex<double>>& eigs) {
    std::ostringstream out;
    out << "re,im,modulus\n";
    out << std::setprecision(17);
    for (const auto& e : eigs)
        out << e.real() << ',' << e.imag() << ',' << std::abs(e) << '\n';
    return out.str();
}

} // namespace oddsym
