#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oddsym/c1_operator.hpp"
#include "oddsym/spectrum.hpp"

#include <nlohmann/json_fwd.hpp>

// End-to-end verification of one shape (exact graph route, numeric spectral
// route, or both), positivity statements, window-policy audit, and stable
// JSON serialization for all of it.

namespace oddsym {

enum class VerifyMode { exact, numeric, both };

VerifyMode parse_mode(const std::string& text); // throws std::invalid_argument
std::string mode_name(VerifyMode mode);

std::string policy_name(WindowPolicy policy);   // "standard" / "paper-literal"
WindowPolicy parse_policy(const std::string& text);

struct WitnessReport {
    std::vector<int> from;
    std::vector<int> to;
    std::vector<std::vector<int>> path;
    bool operator==(const WitnessReport&) const = default;
};

struct PositivitySection {
    bool part_a = false;
    bool part_b = false;
    bool part_c = false;
    WitnessReport witness_a, witness_b, witness_c;
    bool conjecture_holds = false;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> conjecture_failing_pairs;
    bool operator==(const PositivitySection&) const = default;
};

struct ShapeReport {
    int k = 0;
    int n = 0;
    int dimension = 0;
    int fano_index = 0;
    int basis_size = 0;
    std::string window_policy = "standard";

    bool windows_agree = false;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> window_disagreements;

    bool has_exact = false;
    bool strongly_connected_flag = false;
    int scc_count = 0;
    int period_value = 0; // 0 when undefined
    bool exact_ok = false;

    bool has_numeric = false;
    PropertyOReport numeric;
    double power_delta0 = 0.0;
    int power_iterations = 0;
    bool power_converged = false;
    double delta0_route_gap = 0.0; // relative gap, power iteration vs QR
    bool numeric_ok = false;

    bool has_positivity = false;
    PositivitySection positivity;

    bool paths_agree = false; // meaningful when both routes ran
    bool property_o = false;  // the requested mode's verdict
    double elapsed_ms = 0.0;

    bool operator==(const ShapeReport&) const = default;
};

ShapeReport verify_shape(const Shape& shape, VerifyMode mode, Tolerances tolerances = {},
                         bool with_positivity = false,
                         WindowPolicy policy = WindowPolicy::standard);

struct SweepReport {
    int max_n = 0;
    std::string mode = "both";
    int jobs = 1;
    std::vector<ShapeReport> shapes;
    bool all_pass = false;
    bool all_windows_agree = false;
    double elapsed_ms = 0.0;
    bool operator==(const SweepReport&) const = default;
};

// Verifies every shape with 1 <= k <= n <= max_n on the given number of
// worker threads; shape order in the result is (n, k) lexicographic.
SweepReport run_sweep(int max_n, VerifyMode mode, Tolerances tolerances = {}, int jobs = 1,
                      WindowPolicy policy = WindowPolicy::standard);

// JSON layer.  emit/parse round-trip exactly.
nlohmann::json to_json(const PropertyOReport& report);
PropertyOReport property_o_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ShapeReport& report);
ShapeReport shape_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepReport& report);
SweepReport sweep_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ChevalleyChain& chain, const Shape& shape);
nlohmann::json to_json(const ChevalleyExpansion& expansion);

// CSV spectrum rows: "re,im,modulus" with header.
std::string spectrum_csv(const std::vector<std::complex<double>>& eigs);

} // namespace oddsym
