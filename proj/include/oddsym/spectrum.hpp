#pragma once

#include <complex>
#include <string>
#include <vector>

#include "oddsym/bruhat_graph.hpp"
#include "oddsym/c1_operator.hpp"

// Numeric side of Property O.  Integer matrix entries are converted to
// floating point here and nowhere else.  Two independent routes to the
// Perron root delta0: the full QR spectrum, and power iteration on M + I
// (the shift defeats the periodicity of M, whose extreme eigenvalues are
// the r-th roots of unity times delta0).

namespace oddsym {

// Dense row-major copy in floating point.
std::vector<std::vector<double>> to_dense(const C1Matrix& c1);

// Full spectrum through a dense nonsymmetric QR solver; throws
// std::runtime_error when the iteration fails to converge.
std::vector<std::complex<double>> eigenvalues(const std::vector<std::vector<double>>& matrix);
std::vector<std::complex<double>> eigenvalues(const C1Matrix& c1);

struct PerronResult {
    double value = 0.0;                // Perron root of M (shift removed)
    std::vector<double> eigenvector;   // sup-norm normalized, entrywise > 0
    int iterations = 0;
    bool converged = false;
};

// Power iteration on M + I with Collatz-Wielandt bounds: converged when
// max_i (y_i / x_i) - min_i (y_i / x_i) <= tol * max ratio.
PerronResult perron_root(const std::vector<std::vector<double>>& matrix,
                         double tol = 1e-12, int max_iterations = 50000);
PerronResult perron_root(const C1Matrix& c1, double tol = 1e-12,
                         int max_iterations = 50000);

struct Tolerances {
    double modulus = 1e-8; // relative, for grouping maximal-modulus eigenvalues
    double roots = 1e-6;   // relative, for matching against delta0 * r-th roots of unity
    bool operator==(const Tolerances&) const = default;
};

struct PropertyOReport {
    int k = 0;
    int n = 0;
    int fano_index = 0;
    double delta0 = 0.0;
    std::string delta0_provenance = "computed";
    std::vector<std::complex<double>> eigenvalues;
    int max_modulus_count = 0;
    bool condition1 = false; // delta0 is an eigenvalue, simple, real positive
    bool condition2 = false; // maximal-modulus eigenvalues = delta0 * r-th roots of unity
    bool exact_verdict = false;
    bool paths_agree = false;
    Tolerances tolerances;
    bool operator==(const PropertyOReport&) const = default;
};

// Checks the two spectral conditions; fano_index/delta0/eigenvalues are
// copied into the report, exact_verdict and paths_agree are left for the
// caller to fill from the graph side.
PropertyOReport verify_property_o(const std::vector<std::complex<double>>& eigs,
                                  int fano_index, double delta0,
                                  Tolerances tolerances = {});

// Exact route: irreducibility plus period equal to the Fano index.
bool exact_verdict(const QuantumBruhatGraph& graph, int fano_index);

} // namespace oddsym
