#pragma once

#include <cstddef>
#include <vector>

#include "csdo/model.hpp"

/// Closed-form bound-state spectra for both confinement routes, their
/// nonrelativistic limits, spectrum tables and degeneracy clustering.
namespace csdo {

enum class SpectrumModel {
    unconfined,
    unconfined_nonrel,
    hardwall,
    hardwall_nonrel,
    oracle_unconfined,
    oracle_hardwall,
};

/// Absolute energy gap below which two levels count as degenerate.
inline constexpr double kDegeneracyTolerance = 1e-9;

struct EnergyLevel {
    QuantumNumbers qn;
    SpectrumModel model;
    double nu;
    double energy;  // NaN when !physical
    bool physical;  // false when the energy radicand was negative
    DerivedParams params;
    RegimeReport regime;
};

/// nu = 4 m w0 delta (n + alpha/2 + 1/2), the series-termination route.
/// Throws ZeroFrequency when m*omega0*delta = 0.
double quantized_nu_unconfined(const PhysicalConfig& config, const QuantumNumbers& qn);

/// nu = (1/rho0^2) (n pi + alpha pi/2 + 3 pi/4)^2, the wall-condition route
/// (cosine zeros of the large-|a| form). Finite for omega0 = 0.
/// Throws UnboundedDomain when omega = 0.
double hardwall_nu(const PhysicalConfig& config, const QuantumNumbers& qn);

/// Relativistic energies: E = sqrt(m^2 + nu - coupling_shift) - omega(l+1/2)
/// on the particle branch (antiparticle negates the root).
/// Throw NonPhysicalRadicand plus the nu-route errors above.
EnergyLevel energy_unconfined(const PhysicalConfig& config, const QuantumNumbers& qn);
EnergyLevel energy_hardwall(const PhysicalConfig& config, const QuantumNumbers& qn);

/// First-order expansions in 1/m of the two energies above; leading term is
/// exactly the rest energy m. Never raise NonPhysicalRadicand.
EnergyLevel energy_unconfined_nonrel(const PhysicalConfig& config, const QuantumNumbers& qn);
EnergyLevel energy_hardwall_nonrel(const PhysicalConfig& config, const QuantumNumbers& qn);

enum class SkipPolicy {
    strict,        // propagate NonPhysicalRadicand
    keep_flagged,  // keep the row with physical=false and energy=NaN
};

struct SpectrumRequest {
    int n_max = 0;
    int l_min = 0;
    int l_max = 0;
    std::vector<int> spins = {-1, +1};
    SpectrumModel model = SpectrumModel::unconfined;
    SkipPolicy policy = SkipPolicy::strict;
};

/// Every level with n in [0, n_max], l in [l_min, l_max], s in spins.
/// Physical rows sorted by (energy, n, l, s); flagged rows follow, sorted by
/// (n, l, s). NonPositiveDiscriminant always propagates: it invalidates the
/// whole spin column, unlike a per-level radicand failure.
/// Throws ConfigError for an invalid request.
std::vector<EnergyLevel> spectrum_table(const PhysicalConfig& config,
                                        const SpectrumRequest& request);

struct DegeneracyCluster {
    std::vector<std::size_t> members;  // indices into the input, energy order
    double energy_min;
    double energy_max;
};

/// Single-linkage clustering of the physical levels: a gap > tolerance
/// between energy-adjacent levels starts a new cluster.
std::vector<DegeneracyCluster> degeneracy_report(const std::vector<EnergyLevel>& levels,
                                                 double tolerance = kDegeneracyTolerance);

} // namespace csdo
