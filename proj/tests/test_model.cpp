#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "csdo/model.hpp"

using namespace csdo;

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

TEST_CASE("physical config bounds") {
    CHECK_NOTHROW(PhysicalConfig(1.0, 0.0, 0.0, 1.0));
    CHECK_NOTHROW(PhysicalConfig(2.5, 0.1, 0.3, 0.25));
    CHECK_THROWS_AS(PhysicalConfig(0.0, 0.1, 0.1, 0.8), ConfigError);
    CHECK_THROWS_AS(PhysicalConfig(-1.0, 0.1, 0.1, 0.8), ConfigError);
    CHECK_THROWS_AS(PhysicalConfig(1.0, -0.1, 0.1, 0.8), ConfigError);
    CHECK_THROWS_AS(PhysicalConfig(1.0, 0.1, -0.1, 0.8), ConfigError);
    CHECK_THROWS_AS(PhysicalConfig(1.0, 0.1, 0.1, 0.0), ConfigError);
    CHECK_THROWS_AS(PhysicalConfig(1.0, 0.1, 0.1, 1.2), ConfigError);
    CHECK(PhysicalConfig(1.0, 0.1, 0.1, 0.8).linear_mass_density() ==
          doctest::Approx(0.05).epsilon(1e-15));
    CHECK(PhysicalConfig(1.0, 0.1, 0.1, 1.0).linear_mass_density() == 0.0);
}

TEST_CASE("quantum number bounds") {
    CHECK_NOTHROW(QuantumNumbers(0, -3, 1));
    CHECK_NOTHROW(QuantumNumbers(5, 3, -1, Branch::antiparticle));
    CHECK_THROWS_AS(QuantumNumbers(-1, 0, 1), ConfigError);
    CHECK_THROWS_AS(QuantumNumbers(0, 0, 0), ConfigError);
    CHECK_THROWS_AS(QuantumNumbers(0, 0, 2), ConfigError);
}

TEST_CASE("effective angular momentum is integer exact in flat space") {
    for (int l = -5; l <= 5; ++l) {
        CHECK(effective_angular_momentum(l, +1, 1.0) == double(l));
        CHECK(effective_angular_momentum(l, -1, 1.0) == double(l + 1));
    }
    CHECK(std::abs(effective_angular_momentum(0, +1, 0.8) - 0.1) <= 1e-16);
    CHECK(std::abs(effective_angular_momentum(0, -1, 0.8) - 0.9) <= 1e-15);
    CHECK(std::abs(effective_angular_momentum(-1, +1, 0.8) + 0.9) <= 1e-15);
}

TEST_CASE("frequency rescaling values and guard") {
    CHECK(delta_parameter(+1, 0.1, 1.0) == 1.0954451150103321);
    CHECK(delta_parameter(+1, 1.0, 1.0) == 1.7320508075688772);
    CHECK(delta_parameter(-1, 0.1, 1.0) == std::sqrt(0.8));
    CHECK(delta_parameter(+1, 0.0, 0.7) == 1.0);
    CHECK_THROWS_AS(delta_parameter(-1, 0.6, 1.0), NonPositiveDiscriminant);
    // Radicand exactly zero is rejected too: delta divides amplitudes later.
    CHECK_THROWS_AS(delta_parameter(-1, 0.5, 1.0), NonPositiveDiscriminant);
}

TEST_CASE("light-cone radius inverts the angular factor") {
    CHECK(std::isinf(physical_radius(0.0, 0.8)));
    const double cases[][2] = {{0.1, 0.8}, {0.05, 0.8}, {1.0, 1.0}, {0.3, 0.45}};
    for (const auto& c : cases) {
        const double r = physical_radius(c[0], c[1]);
        CHECK(std::abs(r * c[0] * c[1] - 1.0) <= 2.0 * kEps);
    }
}

TEST_CASE("derived parameter bundle") {
    const PhysicalConfig config(1.0, 1e-5, 0.05, 0.8);
    const QuantumNumbers qn(0, 0, +1);
    const auto p = DerivedParams::from(config, qn);
    CHECK(std::abs(p.zeta - 0.1) <= 1e-16);
    CHECK(std::abs(p.alpha - 0.125) <= 1e-15);
    CHECK(p.delta == 1.0392304845413265);
    CHECK(std::abs(p.rho0 - 25.0) <= 25.0 * 2.0 * kEps);
    CHECK(std::abs(p.xi0 - 0.00649519052838329) <= 1e-16);
    CHECK(p.bounded());

    const PhysicalConfig still(1.0, 0.5, 0.0, 1.0);
    const auto q = DerivedParams::from(still, qn);
    CHECK(std::isinf(q.rho0));
    CHECK(std::isinf(q.xi0));
    CHECK_FALSE(q.bounded());
}

TEST_CASE("coupling shift frozen value") {
    const PhysicalConfig config(1.0, 0.0, 0.1, 0.8);
    const QuantumNumbers qn(0, 0, +1);
    CHECK(std::abs(coupling_shift(config, qn) - 0.008100000000000003) <= 1e-18);
    // omega = 0 and eta = 1 leaves only the oscillator part.
    const PhysicalConfig flat(1.0, 0.5, 0.0, 1.0);
    CHECK(coupling_shift(flat, QuantumNumbers(0, 0, +1)) == 1.0);
    CHECK(coupling_shift(flat, QuantumNumbers(0, -1, +1)) == 0.0);
}

TEST_CASE("energy-nu round trip over random configurations") {
    std::mt19937 rng(20260814u);
    std::uniform_real_distribution<double> umass(0.5, 3.0);
    std::uniform_real_distribution<double> uw0(0.0, 0.3);
    std::uniform_real_distribution<double> uw(0.0, 0.45);
    std::uniform_real_distribution<double> ueta(0.2, 1.0);
    std::uniform_real_distribution<double> uroot(0.1, 5.0);
    std::uniform_int_distribution<int> ul(-4, 4);
    std::uniform_int_distribution<int> ucoin(0, 1);
    for (int trial = 0; trial < 1000; ++trial) {
        const PhysicalConfig config(umass(rng), uw0(rng), uw(rng), ueta(rng));
        const int spin = ucoin(rng) ? 1 : -1;
        const Branch branch = ucoin(rng) ? Branch::particle : Branch::antiparticle;
        const QuantumNumbers qn(0, ul(rng), spin, branch);
        const double root = uroot(rng);
        // nu chosen so the radicand is exactly root^2 > 0.
        const double shift = coupling_shift(config, qn);
        const double nu = shift - config.mass * config.mass + root * root;
        const double energy = energy_from_nu(nu, config, qn);
        const double nu_back = nu_from_energy(energy, config, qn);
        const double energy_back = energy_from_nu(nu_back, config, qn);
        CHECK(std::abs(nu_back - nu) <= 1e-12 * std::max(1.0, std::abs(nu)));
        CHECK(std::abs(energy_back - energy) <= 1e-12 * std::max(1.0, std::abs(energy)));
    }
}

TEST_CASE("branch sign convention") {
    const PhysicalConfig config(1.0, 0.25, 0.0, 1.0);
    const QuantumNumbers up(1, 0, +1, Branch::particle);
    const QuantumNumbers down(1, 0, +1, Branch::antiparticle);
    const double nu = 1.5;
    CHECK(energy_from_nu(nu, config, up) > 0.0);
    CHECK(energy_from_nu(nu, config, down) < 0.0);
    CHECK(energy_from_nu(nu, config, up) == -energy_from_nu(nu, config, down));
}

TEST_CASE("energy radicand guard") {
    // Fast rotation and large l make the coupling shift exceed m^2 + nu.
    const PhysicalConfig config(1.0, 0.0, 0.45, 1.0);
    const QuantumNumbers qn(0, 10, +1);
    CHECK_THROWS_AS(energy_from_nu(0.0, config, qn), NonPhysicalRadicand);
}

TEST_CASE("regime report") {
    const RegimeReport r = regime_check(PhysicalConfig(1.0, 1e-5, 0.05, 0.8));
    CHECK(std::abs(r.case1_ratio - 0.07905694150420947) <= 1e-16);
    CHECK(r.case1 == RegimeFlag::ok);
    CHECK(r.case2_value == 1e-5);
    CHECK(r.case2 == RegimeFlag::ok);

    const RegimeReport hot = regime_check(PhysicalConfig(1.0, 0.5, 0.05, 0.8));
    CHECK(hot.case1 == RegimeFlag::exceeded);
    CHECK(hot.case2 == RegimeFlag::exceeded);

    const RegimeReport still = regime_check(PhysicalConfig(1.0, 1e-3, 0.0, 1.0));
    CHECK(still.case1 == RegimeFlag::not_applicable);
    CHECK(still.case2 == RegimeFlag::ok);
    CHECK(still.notes.find("omega=0") != std::string::npos);
}
