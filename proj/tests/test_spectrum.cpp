#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "oddsym/spectrum.hpp"
#include "oracles.hpp"

using namespace oddsym;

namespace {

double frobenius(const C1Matrix& c1) {
    double acc = 0.0;
    for (const auto& row : c1.entries)
        for (auto e : row) acc += static_cast<double>(e) * static_cast<double>(e);
    return std::sqrt(acc);
}

} // namespace

TEST_CASE("power iteration on a symmetric two by two matrix") {
    auto result = perron_root({{3.0, 2.0}, {2.0, 3.0}});
    CHECK(result.converged);
    CHECK(result.value == doctest::Approx(5.0).epsilon(1e-12));
    REQUIRE(result.eigenvector.size() == 2);
    CHECK(result.eigenvector[0] > 0.0);
    CHECK(result.eigenvector[1] > 0.0);
}

TEST_CASE("single-row spectra are scaled roots of unity") {
    for (int n = 1; n <= 8; ++n) {
        C1Matrix c1 = build_c1_matrix(make_shape(1, n));
        const int r = 2 * n + 1;
        auto eigs = eigenvalues(c1);
        REQUIRE(static_cast<int>(eigs.size()) == r);
        std::vector<bool> used(eigs.size(), false);
        for (int j = 0; j < r; ++j) {
            std::complex<double> target =
                static_cast<double>(r) *
                std::polar(1.0, 2.0 * std::numbers::pi * j / r);
            bool found = false;
            for (std::size_t i = 0; i < eigs.size(); ++i) {
                if (used[i]) continue;
                if (std::abs(eigs[i] - target) <= 1e-9 * r) {
                    used[i] = true;
                    found = true;
                    break;
                }
            }
            CAPTURE(n);
            CAPTURE(j);
            CHECK(found);
        }

        // The shifted iteration settles immediately and exactly.
        auto power = perron_root(c1);
        CHECK(power.converged);
        CHECK(power.value == static_cast<double>(r));
    }
}

TEST_CASE("IG(2,5) has exactly four extreme eigenvalues among eight") {
    C1Matrix c1 = build_c1_matrix(make_shape(2, 2));
    auto eigs = eigenvalues(c1);
    REQUIRE(eigs.size() == 8);
    auto power = perron_root(c1);
    REQUIRE(power.converged);
    auto report = verify_property_o(eigs, c1.shape.fano_index(), power.value);
    CHECK(report.max_modulus_count == 4);
    CHECK(report.condition1);
    CHECK(report.condition2);
}

TEST_CASE("the two delta0 routes agree") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            C1Matrix c1 = build_c1_matrix(make_shape(k, n));
            auto eigs = eigenvalues(c1);
            double qr_delta0 = 0.0;
            for (const auto& e : eigs) qr_delta0 = std::max(qr_delta0, std::abs(e));
            auto power = perron_root(c1);
            CAPTURE(k);
            CAPTURE(n);
            REQUIRE(power.converged);
            CHECK(std::abs(power.value - qr_delta0) <= 1e-8 * qr_delta0);
            for (double x : power.eigenvector) CHECK(x > 0.0);
        }
}

TEST_CASE("delta0 sits between the extreme column sums") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            C1Matrix c1 = build_c1_matrix(make_shape(k, n));
            double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
            for (int j = 0; j < c1.size(); ++j) {
                double sum = 0.0;
                for (int i = 0; i < c1.size(); ++i)
                    sum += static_cast<double>(c1.entries[i][j]);
                lo = std::min(lo, sum);
                hi = std::max(hi, sum);
            }
            auto power = perron_root(c1);
            REQUIRE(power.converged);
            CHECK(power.value >= lo - 1e-9 * hi);
            CHECK(power.value <= hi + 1e-9 * hi);
        }
}

TEST_CASE("eigenvalue sum matches the trace") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            C1Matrix c1 = build_c1_matrix(make_shape(k, n));
            auto eigs = eigenvalues(c1);
            std::complex<double> sum = 0.0;
            for (const auto& e : eigs) sum += e;
            std::int64_t trace = 0;
            for (int i = 0; i < c1.size(); ++i) trace += c1.entries[i][i];
            double scale = std::max(1.0, frobenius(c1));
            CHECK(std::abs(sum - static_cast<double>(trace)) <= 1e-8 * scale);
        }
}

TEST_CASE("eigenvalue product matches the exact determinant in modulus") {
    for (auto [k, n] : {std::pair{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 2}}) {
        C1Matrix c1 = build_c1_matrix(make_shape(k, n));
        REQUIRE(c1.size() <= 12);
        std::vector<std::vector<boost::multiprecision::cpp_int>> m(
            c1.size(), std::vector<boost::multiprecision::cpp_int>(c1.size()));
        for (int i = 0; i < c1.size(); ++i)
            for (int j = 0; j < c1.size(); ++j) m[i][j] = c1.entries[i][j];
        auto det = oracle::integer_determinant(m);
        double expected = std::abs(det.convert_to<double>());
        double product = 1.0;
        for (const auto& e : eigenvalues(c1)) product *= std::abs(e);
        CAPTURE(k);
        CAPTURE(n);
        CHECK(std::abs(product - expected) <= 1e-8 * std::max(1.0, expected));
    }
}

TEST_CASE("spectral conditions reject a synthetic counterexample") {
    auto report = verify_property_o({{2.0, 0.0}, {-2.0, 0.0}}, 1, 2.0);
    CHECK(report.condition1);
    CHECK(!report.condition2);
    CHECK(report.max_modulus_count == 2);
}

TEST_CASE("spectral verdict equals the graph verdict on small shapes") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k) {
            Shape shape = make_shape(k, n);
            C1Matrix c1 = build_c1_matrix(shape);
            QuantumBruhatGraph graph = build_graph(c1);
            bool exact = exact_verdict(graph, shape.fano_index());
            auto power = perron_root(c1);
            REQUIRE(power.converged);
            auto report = verify_property_o(eigenvalues(c1), shape.fano_index(), power.value);
            CAPTURE(k);
            CAPTURE(n);
            CHECK(exact);
            CHECK((report.condition1 && report.condition2) == exact);
            // The extreme eigenvalue count is a multiple of the fano index.
            CHECK(report.max_modulus_count % shape.fano_index() == 0);
        }
}
