#include "oddsym/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace oddsym {

std::vector<std::vector<double>> to_dense(const C1Matrix& c1) {
    std::vector<std::vector<double>> m(c1.size(), std::vector<double>(c1.size()));
    for (int i = 0; i < c1.size(); ++i)
        for (int j = 0; j < c1.size(); ++j)
            m[i][j] = static_cast<double>(c1.entries[i][j]);
    return m;
}

std::vector<std::complex<double>> eigenvalues(const std::vector<std::vector<double>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = matrix[i][j];
    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: QR iteration did not converge");
    std::vector<std::complex<double>> out(n);
    for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

std::vector<std::complex<double>> eigenvalues(const C1Matrix& c1) {
    return eigenvalues(to_dense(c1));
}

PerronResult perron_root(const std::vector<std::vector<double>>& matrix, double tol,
                         int max_iterations) {
    const int n = static_cast<int>(matrix.size());
    PerronResult result;
    if (n == 0) return result;

    std::vector<double> x(n, 1.0), y(n);
    double lo = 0.0, hi = 0.0;
    for (int it = 1; it <= max_iterations; ++it) {
        // y = (M + I) x
        for (int i = 0; i < n; ++i) {
            double acc = x[i];
            for (int j = 0; j < n; ++j) acc += matrix[i][j] * x[j];
            y[i] = acc;
        }
        lo = std::numeric_limits<double>::infinity();
        hi = 0.0;
        for (int i = 0; i < n; ++i) {
            double ratio = y[i] / x[i];
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        double norm = *std::max_element(y.begin(), y.end());
        for (int i = 0; i < n; ++i) x[i] = y[i] / norm;
        result.iterations = it;
        if (hi - lo <= tol * hi) {
            result.value = hi - 1.0;
            result.eigenvector = x;
            result.converged = true;
            return result;
        }
    }
    result.value = 0.5 * (hi + lo) - 1.0; // best effort, unconverged
    result.eigenvector = x;
    return result;
}

PerronResult perron_root(const C1Matrix& c1, double tol, int max_iterations) {
    return perron_root(to_dense(c1), tol, max_iterations);
}

PropertyOReport verify_property_o(const std::vector<std::complex<double>>& eigs,
                                  int fano_index, double delta0, Tolerances tolerances) {
    PropertyOReport report;
    report.fano_index = fano_index;
    report.delta0 = delta0;
    report.eigenvalues = eigs;
    report.tolerances = tolerances;

    // delta0 must be a simple eigenvalue: exactly one eigenvalue within the
    // modulus tolerance of delta0 itself (as a point in the plane).
    int near_delta0 = 0;
    for (const auto& e : eigs)
        if (std::abs(e - std::complex<double>(delta0, 0.0)) <= tolerances.modulus * delta0)
            ++near_delta0;
    report.condition1 = near_delta0 == 1 && delta0 > 0.0;

    // Maximal-modulus eigenvalues, grouped with a relative tolerance.
    std::vector<std::complex<double>> extremes;
    for (const auto& e : eigs)
        if (std::abs(e) >= delta0 * (1.0 - tolerances.modulus)) extremes.push_back(e);
    report.max_modulus_count = static_cast<int>(extremes.size());

    // They must match delta0 times the r-th roots of unity, one for one.
    report.condition2 = report.max_modulus_count == fano_index;
    if (report.condition2) {
        std::vector<bool> used(extremes.size(), false);
        for (int j = 0; j < fano_index; ++j) {
            double angle = 2.0 * std::numbers::pi * j / fano_index;
            std::complex<double> target = delta0 * std::polar(1.0, angle);
            bool found = false;
            for (std::size_t i = 0; i < extremes.size(); ++i) {
                if (used[i]) continue;
                if (std::abs(extremes[i] - target) <= tolerances.roots * delta0) {
                    used[i] = true;
                    found = true;
                    break;
                }
            }
            if (!found) {
                report.condition2 = false;
                break;
            }
        }
    }
    return report;
}

bool exact_verdict(const QuantumBruhatGraph& graph, int fano_index) {
    return strongly_connected(graph) && period(graph) == fano_index;
}

} // namespace oddsym
