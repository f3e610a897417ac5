#include "csdo/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

namespace csdo {

namespace {

const double kPi = std::acos(-1.0);

/// Shared tail of both nonrelativistic expansions: every term after the
/// oscillator ladder, including the angular shift.
double nonrel_tail(const PhysicalConfig& config, const DerivedParams& p,
                   const QuantumNumbers& qn) {
    const double w = config.omega;
    const double m = config.mass;
    return -config.omega0 * (qn.spin * p.zeta / config.eta + 1.0) -
           w * w * p.zeta * p.zeta / (2.0 * m) - w * w * config.eta * config.eta / (2.0 * m) -
           qn.spin * w * w * config.eta * p.zeta / m - w * (qn.l + 0.5);
}

EnergyLevel make_level(const PhysicalConfig& config, const QuantumNumbers& qn,
                       SpectrumModel model, double nu, double energy, bool physical) {
    return EnergyLevel{qn,      model,    nu,
                       energy,  physical, DerivedParams::from(config, qn),
                       regime_check(config)};
}

} // namespace

double quantized_nu_unconfined(const PhysicalConfig& config, const QuantumNumbers& qn) {
    const auto p = DerivedParams::from(config, qn);
    const double c = config.mass * config.omega0 * p.delta;
    if (!(c > 0.0))
        throw ZeroFrequency("unconfined quantization needs m*omega0*delta > 0");
    return 4.0 * c * (qn.n + p.alpha / 2.0 + 0.5);
}

double hardwall_nu(const PhysicalConfig& config, const QuantumNumbers& qn) {
    const auto p = DerivedParams::from(config, qn);
    if (!p.bounded())
        throw UnboundedDomain("hard-wall quantization needs omega > 0");
    const double bracket = qn.n * kPi + p.alpha * kPi / 2.0 + 3.0 * kPi / 4.0;
    const double scaled = bracket / p.rho0;
    return scaled * scaled;
}

EnergyLevel energy_unconfined(const PhysicalConfig& config, const QuantumNumbers& qn) {
    const double nu = quantized_nu_unconfined(config, qn);
    return make_level(config, qn, SpectrumModel::unconfined, nu,
                      energy_from_nu(nu, config, qn), true);
}

EnergyLevel energy_hardwall(const PhysicalConfig& config, const QuantumNumbers& qn) {
    const double nu = hardwall_nu(config, qn);
    return make_level(config, qn, SpectrumModel::hardwall, nu,
                      energy_from_nu(nu, config, qn), true);
}

EnergyLevel energy_unconfined_nonrel(const PhysicalConfig& config, const QuantumNumbers& qn) {
    const double nu = quantized_nu_unconfined(config, qn);
    const auto p = DerivedParams::from(config, qn);
    const double energy = config.mass +
                          2.0 * config.omega0 * p.delta * (qn.n + p.alpha / 2.0 + 0.5) +
                          nonrel_tail(config, p, qn);
    return make_level(config, qn, SpectrumModel::unconfined_nonrel, nu, energy, true);
}

EnergyLevel energy_hardwall_nonrel(const PhysicalConfig& config, const QuantumNumbers& qn) {
    const double nu = hardwall_nu(config, qn);
    const auto p = DerivedParams::from(config, qn);
    const double energy = config.mass + nu / (2.0 * config.mass) + nonrel_tail(config, p, qn);
    return make_level(config, qn, SpectrumModel::hardwall_nonrel, nu, energy, true);
}

std::vector<EnergyLevel> spectrum_table(const PhysicalConfig& config,
                                        const SpectrumRequest& request) {
    if (request.n_max < 0)
        throw ConfigError("n_max must be >= 0, got " + std::to_string(request.n_max));
    if (request.l_min > request.l_max)
        throw ConfigError("l_min must not exceed l_max");
    if (request.spins.empty())
        throw ConfigError("at least one spin required");
    for (int s : request.spins)
        if (s != 1 && s != -1)
            throw ConfigError("spin entries must be +1 or -1, got " + std::to_string(s));

    EnergyLevel (*level_of)(const PhysicalConfig&, const QuantumNumbers&) = nullptr;
    switch (request.model) {
    case SpectrumModel::unconfined: level_of = energy_unconfined; break;
    case SpectrumModel::unconfined_nonrel: level_of = energy_unconfined_nonrel; break;
    case SpectrumModel::hardwall: level_of = energy_hardwall; break;
    case SpectrumModel::hardwall_nonrel: level_of = energy_hardwall_nonrel; break;
    default:
        throw ConfigError("spectrum_table handles the four closed-form models only");
    }

    std::vector<int> spins = request.spins;
    std::sort(spins.begin(), spins.end());
    spins.erase(std::unique(spins.begin(), spins.end()), spins.end());

    std::vector<EnergyLevel> rows;
    rows.reserve(static_cast<std::size_t>(request.n_max + 1) *
                 (request.l_max - request.l_min + 1) * spins.size());
    for (int s : spins) {
        for (int l = request.l_min; l <= request.l_max; ++l) {
            for (int n = 0; n <= request.n_max; ++n) {
                const QuantumNumbers qn(n, l, s);
                try {
                    rows.push_back(level_of(config, qn));
                } catch (const NonPhysicalRadicand&) {
                    if (request.policy == SkipPolicy::strict)
                        throw;
                    const double nu = request.model == SpectrumModel::hardwall
                                          ? hardwall_nu(config, qn)
                                          : quantized_nu_unconfined(config, qn);
                    rows.push_back(make_level(config, qn, request.model, nu,
                                              std::numeric_limits<double>::quiet_NaN(), false));
                }
            }
        }
    }

    std::sort(rows.begin(), rows.end(), [](const EnergyLevel& a, const EnergyLevel& b) {
        if (a.physical != b.physical)
            return a.physical;
        const auto key = [](const EnergyLevel& r) {
            return std::make_tuple(r.qn.n, r.qn.l, r.qn.spin);
        };
        if (a.physical && a.energy != b.energy)
            return a.energy < b.energy;
        return key(a) < key(b);
    });
    return rows;
}

std::vector<DegeneracyCluster> degeneracy_report(const std::vector<EnergyLevel>& levels,
                                                 double tolerance) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < levels.size(); ++i)
        if (levels[i].physical && std::isfinite(levels[i].energy))
            order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return levels[a].energy < levels[b].energy;
    });

    std::vector<DegeneracyCluster> clusters;
    for (std::size_t idx : order) {
        const double e = levels[idx].energy;
        if (clusters.empty() || !(e - clusters.back().energy_max <= tolerance)) {
            clusters.push_back(DegeneracyCluster{{idx}, e, e});
        } else {
            clusters.back().members.push_back(idx);
            clusters.back().energy_max = e;
        }
    }
    return clusters;
}

} // namespace csdo
