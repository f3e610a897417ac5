#include "csdo/model.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace csdo {

namespace {

std::string num(double v) {
    return std::to_string(v);
}

} // namespace

PhysicalConfig::PhysicalConfig(double mass, double omega0, double omega, double eta)
    : mass(mass), omega0(omega0), omega(omega), eta(eta) {
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw ConfigError("mass must be a positive finite real, got " + num(mass));
    if (!(omega0 >= 0.0) || !std::isfinite(omega0))
        throw ConfigError("omega0 must be a nonnegative finite real, got " + num(omega0));
    if (!(omega >= 0.0) || !std::isfinite(omega))
        throw ConfigError("omega must be a nonnegative finite real, got " + num(omega));
    if (!(eta > 0.0) || !(eta <= 1.0))
        throw ConfigError("eta must lie in (0, 1], got " + num(eta));
}

QuantumNumbers::QuantumNumbers(int n, int l, int spin, Branch branch)
    : n(n), l(l), spin(spin), branch(branch) {
    if (n < 0)
        throw ConfigError("radial quantum number must be >= 0, got " + std::to_string(n));
    if (spin != 1 && spin != -1)
        throw ConfigError("spin label must be +1 or -1, got " + std::to_string(spin));
}

double effective_angular_momentum(int l, int spin, double eta) {
    return l + (1.0 - spin) / 2.0 + spin * (1.0 - eta) / 2.0;
}

double delta_parameter(int spin, double omega, double eta) {
    const double disc = 1.0 + 2.0 * spin * omega * eta;
    if (!(disc > 0.0))
        throw NonPositiveDiscriminant("1 + 2*s*omega*eta = " + num(disc) +
                                      " (s=" + std::to_string(spin) +
                                      ", omega=" + num(omega) + ", eta=" + num(eta) + ")");
    return std::sqrt(disc);
}

double physical_radius(double omega, double eta) {
    if (omega == 0.0)
        return std::numeric_limits<double>::infinity();
    return 1.0 / (omega * eta);
}

bool DerivedParams::bounded() const {
    return std::isfinite(rho0);
}

DerivedParams DerivedParams::from(const PhysicalConfig& config, const QuantumNumbers& qn) {
    DerivedParams p{};
    p.zeta = effective_angular_momentum(qn.l, qn.spin, config.eta);
    p.delta = delta_parameter(qn.spin, config.omega, config.eta);
    p.alpha = std::abs(p.zeta) / config.eta;
    p.rho0 = physical_radius(config.omega, config.eta);
    p.xi0 = std::isfinite(p.rho0)
                ? config.mass * config.omega0 * p.delta * p.rho0 * p.rho0
                : std::numeric_limits<double>::infinity();
    return p;
}

double coupling_shift(const PhysicalConfig& config, const QuantumNumbers& qn) {
    const double zeta = effective_angular_momentum(qn.l, qn.spin, config.eta);
    const double w = config.omega;
    return 2.0 * config.mass * config.omega0 * (qn.spin * zeta / config.eta + 1.0) +
           w * w * zeta * zeta + w * w * config.eta * config.eta +
           2.0 * qn.spin * w * w * config.eta * zeta;
}

double nu_from_energy(double energy, const PhysicalConfig& config, const QuantumNumbers& qn) {
    const double shifted = energy + config.omega * (qn.l + 0.5);
    return shifted * shifted - config.mass * config.mass + coupling_shift(config, qn);
}

double energy_from_nu(double nu, const PhysicalConfig& config, const QuantumNumbers& qn) {
    const double radicand = config.mass * config.mass + nu - coupling_shift(config, qn);
    if (radicand < 0.0)
        throw NonPhysicalRadicand("energy radicand = " + num(radicand) +
                                  " at n=" + std::to_string(qn.n) +
                                  " l=" + std::to_string(qn.l) +
                                  " s=" + std::to_string(qn.spin));
    const double root = std::sqrt(radicand);
    const double shift = config.omega * (qn.l + 0.5);
    return (qn.branch == Branch::particle ? root : -root) - shift;
}

RegimeReport regime_check(const PhysicalConfig& config) {
    RegimeReport r{};
    const double mw0 = config.mass * config.omega0;
    r.case2_value = mw0;
    r.case2 = mw0 <= kCase2Threshold ? RegimeFlag::ok : RegimeFlag::exceeded;
    if (config.omega == 0.0) {
        r.case1_ratio = std::sqrt(mw0) / 0.0; // inf, or NaN when omega0 = 0 too
        r.case1 = RegimeFlag::not_applicable;
        r.notes = "omega=0: no light-cone bound, case1 not applicable";
    } else {
        r.case1_ratio = std::sqrt(mw0) / (config.omega * config.eta);
        r.case1 = r.case1_ratio <= kCase1Threshold ? RegimeFlag::ok : RegimeFlag::exceeded;
        r.notes = "";
    }
    return r;
}

} // namespace csdo
