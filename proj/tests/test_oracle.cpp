#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "csdo/oracle.hpp"
#include "csdo/spectra.hpp"

using namespace csdo;

namespace {

// Wall-friendly bench: xi0 ~ 0.16, rho0 = 12.5.
const PhysicalConfig kWall(1.0, 1e-3, 0.1, 0.8);
// Slow-oscillator bench: huge unconfined domain, coarse grids struggle.
const PhysicalConfig kSlow(1.0, 1e-5, 0.05, 0.8);

int sign_changes(const std::vector<double>& v) {
    int count = 0;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] * v[i + 1] < 0.0)
            ++count;
    return count;
}

std::vector<double> uniform_grid(double rho_end, int points) {
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = rho_end * (i + 1) / points;
    return grid;
}

} // namespace

TEST_CASE("unconfined eigenvalues match the termination rule") {
    const QuantumNumbers qn(0, 0, +1);
    const auto res = radial_operator_eigenvalues(kWall, qn, 3, OracleDomain::unconfined, 1200);
    REQUIRE(res.nu.size() == 3);
    CHECK(res.grid_points == 1200);
    CHECK(res.nu_fine.size() == 3);
    CHECK(res.nu_half.size() == 3);
    CHECK(res.residuals.size() == 3);
    for (int n = 0; n < 3; ++n) {
        const double analytic = quantized_nu_unconfined(kWall, QuantumNumbers(n, 0, +1));
        CHECK(std::abs(res.nu[n] - analytic) <= 1e-5 * analytic);
        CHECK(res.residuals[n] <= 1e-8);
        if (n)
            CHECK(res.nu[n] > res.nu[n - 1]);
    }
    CHECK(res.convergence_order >= 1.5);
    CHECK(res.convergence_order <= 2.5);
}

TEST_CASE("dirichlet eigenvalues match the exact wall roots") {
    const QuantumNumbers qn(0, 0, +1);
    const auto fd = radial_operator_eigenvalues(kWall, qn, 3, OracleDomain::dirichlet_at_rho0, 1200);
    const auto roots = exact_hardwall_roots(kWall, qn, 3);
    REQUIRE(fd.nu.size() == 3);
    REQUIRE(roots.nu.size() == 3);
    CHECK(fd.rho_max == roots.rho_max);
    for (int n = 0; n < 3; ++n)
        CHECK(std::abs(fd.nu[n] - roots.nu[n]) <= 1e-5 * roots.nu[n]);
}

TEST_CASE("exact wall roots: residuals, order, and the cosine rule's drift") {
    const QuantumNumbers qn(0, 0, +1);
    const auto res = exact_hardwall_roots(kWall, qn, 5);
    REQUIRE(res.nu.size() == 5);
    CHECK(res.grid_points == 0);
    CHECK(res.nu_fine.empty());
    CHECK(res.nu_half.empty());
    CHECK(std::isnan(res.convergence_order));
    for (int n = 0; n < 5; ++n) {
        CHECK(res.nu[n] > 0.0);
        CHECK(res.residuals[n] <= 1e-8);
        if (n)
            CHECK(res.nu[n] > res.nu[n - 1]);
        const double approx = hardwall_nu(kWall, QuantumNumbers(n, 0, +1));
        const double dev = (approx - res.nu[n]) / res.nu[n];
        // The closed form sits below the true root and tightens with n.
        CHECK(dev < 0.0);
        CHECK(std::abs(dev) <= (n == 0 ? 0.05 : 0.02));
    }
}

TEST_CASE("root scan refuses when cancellation noise overtakes the wall value") {
    // Around the 13th root of this config the alternating series loses all
    // significant digits; sign changes past that point are rounding noise.
    CHECK_THROWS_AS(exact_hardwall_roots(kWall, QuantumNumbers(0, 0, +1), 40), NoConvergence);
}

TEST_CASE("root scan cap raises when asked past the window") {
    // Faster rotation shrinks the wall radius: roots spread out in the scan
    // variable and the cap arrives before the twelfth root or any noise.
    const PhysicalConfig tight(1.0, 1e-3, 0.3, 0.8);
    CHECK_THROWS_AS(exact_hardwall_roots(tight, QuantumNumbers(0, 0, +1), 12), NoSignChange);
}

TEST_CASE("grid refusal is honest and tunable") {
    const QuantumNumbers qn(0, 0, +1);
    CHECK_THROWS_AS(
        radial_operator_eigenvalues(kSlow, qn, 6, OracleDomain::unconfined, 200, 1e-4),
        GridTooCoarse);
    CHECK_NOTHROW(
        radial_operator_eigenvalues(kSlow, qn, 6, OracleDomain::unconfined, 200, 1e-2));
}

TEST_CASE("solver input guards") {
    const QuantumNumbers qn(0, 0, +1);
    CHECK_THROWS_AS(radial_operator_eigenvalues(kWall, qn, -1, OracleDomain::unconfined),
                    DomainError);
    CHECK_THROWS_AS(radial_operator_eigenvalues(kWall, qn, 1, OracleDomain::unconfined, 100),
                    DomainError);
    CHECK_THROWS_AS(radial_operator_eigenvalues(kWall, qn, 60, OracleDomain::unconfined, 200),
                    DomainError);
    CHECK_THROWS_AS(radial_operator_eigenvalues(kWall, qn, 1, OracleDomain::unconfined, 200, 0.0),
                    DomainError);
    CHECK_THROWS_AS(radial_operator_eigenvalues(PhysicalConfig(1.0, 0.0, 0.1, 0.8), qn, 1,
                                                OracleDomain::unconfined),
                    ZeroFrequency);
    CHECK_THROWS_AS(radial_operator_eigenvalues(PhysicalConfig(1.0, 0.3, 0.0, 0.8), qn, 1,
                                                OracleDomain::dirichlet_at_rho0),
                    UnboundedDomain);
    CHECK(radial_operator_eigenvalues(kWall, qn, 0, OracleDomain::unconfined).nu.empty());

    CHECK_THROWS_AS(exact_hardwall_roots(kWall, qn, -1), DomainError);
    CHECK_THROWS_AS(exact_hardwall_roots(PhysicalConfig(1.0, 0.3, 0.0, 0.8), qn, 1),
                    UnboundedDomain);
    CHECK_THROWS_AS(exact_hardwall_roots(PhysicalConfig(1.0, 0.0, 0.1, 0.8), qn, 1),
                    ZeroFrequency);
    CHECK(exact_hardwall_roots(kWall, qn, 0).nu.empty());
}

TEST_CASE("wavefunction nodes count the radial quantum number") {
    const auto params = DerivedParams::from(kWall, QuantumNumbers(0, 0, +1));
    const double c = kWall.mass * kWall.omega0 * params.delta;
    const double rho_end = std::sqrt(80.0 / c);
    for (int n = 0; n <= 3; ++n) {
        const QuantumNumbers qn(n, 0, +1);
        const double nu = quantized_nu_unconfined(kWall, qn);
        const auto sample = evaluate_wavefunction(kWall, qn, nu, uniform_grid(rho_end, 1500));
        CHECK(sign_changes(sample.value) == n);
        CHECK(sample.norm > 0.0);
    }
    // Same census for a confined state at its exact root.
    const QuantumNumbers qn2(2, 0, +1);
    const double nu2 = exact_hardwall_roots(kWall, qn2, 3).nu.back();
    std::vector<double> interior(800);
    for (int i = 0; i < 800; ++i)
        interior[i] = params.rho0 * (i + 1) / 801.0;
    const auto confined = evaluate_wavefunction(kWall, qn2, nu2, interior);
    CHECK(sign_changes(confined.value) == 2);
}

TEST_CASE("ground-state tail mass matches the closed form") {
    const QuantumNumbers qn(0, 0, +1);
    const auto params = DerivedParams::from(kSlow, qn);
    const double c = kSlow.mass * kSlow.omega0 * params.delta;
    const double nu = quantized_nu_unconfined(kSlow, qn);
    auto sample = evaluate_wavefunction(kSlow, qn, nu, uniform_grid(std::sqrt(80.0 / c), 20000));
    CHECK(sample.norm > 0.0);
    sample = normalize_and_tail(std::move(sample), params.rho0);
    CHECK(sample.norm == 1.0);
    // Closed form for the nodeless state: Q(alpha + 1, xi0), the regularized
    // upper incomplete gamma at xi0 = c * rho0^2.
    CHECK(std::abs(sample.tail_mass - 0.9967447192546352) <= 2e-5);
}

TEST_CASE("normalization guards and the unbounded tail convention") {
    WavefunctionSample zero;
    zero.rho = {1.0, 2.0};
    zero.value = {0.0, 0.0};
    CHECK_THROWS_AS(normalize_and_tail(std::move(zero), 1.5), ZeroNorm);

    const PhysicalConfig flat(1.0, 0.25, 0.0, 1.0);
    const QuantumNumbers qn(0, 0, +1);
    auto sample = evaluate_wavefunction(flat, qn, quantized_nu_unconfined(flat, qn),
                                        uniform_grid(12.0, 2000));
    sample = normalize_and_tail(std::move(sample), physical_radius(flat.omega, flat.eta));
    CHECK(sample.tail_mass == 0.0);
}

TEST_CASE("wavefunction grid guards") {
    const QuantumNumbers qn(0, 0, +1);
    const double nu = quantized_nu_unconfined(kWall, qn);
    CHECK_THROWS_AS(evaluate_wavefunction(kWall, qn, nu, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(evaluate_wavefunction(kWall, qn, nu, {-1.0, 2.0}), DomainError);
    CHECK_THROWS_AS(evaluate_wavefunction(kWall, qn, nu, {0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(
        evaluate_wavefunction(PhysicalConfig(1.0, 0.0, 0.1, 0.8), qn, 1.0, {1.0, 2.0}),
        ZeroFrequency);
}

TEST_CASE("grid solver is deterministic") {
    const QuantumNumbers qn(0, 1, +1);
    const auto a = radial_operator_eigenvalues(kWall, qn, 2, OracleDomain::unconfined, 800);
    const auto b = radial_operator_eigenvalues(kWall, qn, 2, OracleDomain::unconfined, 800);
    REQUIRE(a.nu.size() == b.nu.size());
    for (std::size_t i = 0; i < a.nu.size(); ++i) {
        CHECK(a.nu[i] == b.nu[i]);
        CHECK(a.residuals[i] == b.residuals[i]);
    }
}
