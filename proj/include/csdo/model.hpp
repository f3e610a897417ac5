#pragma once

#include <string>

#include "csdo/errors.hpp"

/// Closed-form parameter algebra for a two-dimensional Dirac oscillator seen
/// from a frame rotating at angular velocity omega on a conical space with
/// deficit parameter eta. Natural units (hbar = c = 1) throughout.
namespace csdo {

/// Regime thresholds: case 1 accepts sqrt(m*omega0)/(omega*eta) <= 0.1,
/// case 2 accepts m*omega0 <= 0.01. Advisory only; nothing is rejected.
inline constexpr double kCase1Threshold = 0.1;
inline constexpr double kCase2Threshold = 0.01;

struct PhysicalConfig {
    double mass;    // m > 0
    double omega0;  // oscillator frequency, >= 0
    double omega;   // frame angular velocity, >= 0
    double eta;     // deficit parameter, in (0, 1]; eta = 1 is flat space

    /// Throws ConfigError when any bound above is violated.
    PhysicalConfig(double mass, double omega0, double omega, double eta);

    /// Linear mass density of the defect, (1 - eta) / 4.
    double linear_mass_density() const { return (1.0 - eta) / 4.0; }
};

enum class Branch { particle, antiparticle };

struct QuantumNumbers {
    int n;     // radial, >= 0
    int l;     // orbital, any integer
    int spin;  // +1 or -1
    Branch branch;

    /// Throws ConfigError unless n >= 0 and spin is exactly +1 or -1.
    QuantumNumbers(int n, int l, int spin, Branch branch = Branch::particle);
};

/// zeta_s = l + (1-s)/2 + s(1-eta)/2. Integer-valued iff eta = 1.
double effective_angular_momentum(int l, int spin, double eta);

/// delta_s = sqrt(1 + 2*s*omega*eta).
/// Throws NonPositiveDiscriminant when 1 + 2*s*omega*eta <= 0.
double delta_parameter(int spin, double omega, double eta);

/// Light-cone radius rho0 = 1/(omega*eta); +infinity when omega = 0.
double physical_radius(double omega, double eta);

/// Per-state derived quantities. rho0 and xi0 are +infinity when omega = 0.
struct DerivedParams {
    double zeta;   // effective angular momentum
    double delta;  // frequency rescaling, > 0
    double alpha;  // |zeta| / eta
    double rho0;   // light-cone radius
    double xi0;    // mass * omega0 * delta * rho0^2 when rho0 is finite

    bool bounded() const;
    static DerivedParams from(const PhysicalConfig& config, const QuantumNumbers& qn);
};

/// Sum of the non-derivative couplings that the separation constant absorbs:
/// 2*m*omega0*(s*zeta/eta + 1) + omega^2*zeta^2 + omega^2*eta^2 + 2*s*omega^2*eta*zeta.
double coupling_shift(const PhysicalConfig& config, const QuantumNumbers& qn);

/// nu = (E + omega*(l + 1/2))^2 - m^2 + coupling_shift.
double nu_from_energy(double energy, const PhysicalConfig& config, const QuantumNumbers& qn);

/// E = +-sqrt(m^2 + nu - coupling_shift) - omega*(l + 1/2); the sign follows
/// qn.branch. Throws NonPhysicalRadicand when the radicand is negative.
double energy_from_nu(double nu, const PhysicalConfig& config, const QuantumNumbers& qn);

enum class RegimeFlag { ok, exceeded, not_applicable };

struct RegimeReport {
    double case1_ratio;  // sqrt(m*omega0) / (omega*eta); NaN or inf when omega = 0
    double case2_value;  // m*omega0
    RegimeFlag case1;
    RegimeFlag case2;
    std::string notes;
};

/// Evaluates both regime ratios against the thresholds above.
/// case1 is not_applicable when omega = 0 (no light-cone bound to compare to).
RegimeReport regime_check(const PhysicalConfig& config);

} // namespace csdo
