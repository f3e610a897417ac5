#include "csdo/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csdo/oracle.hpp"

namespace csdo::cli {

namespace {

/// Shortest decimal that round-trips the exact double; the same string feeds
/// CSV and JSON so the two formats always carry identical numerics.
std::string fmt(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string fmt_json(double v) {
    return std::isfinite(v) ? fmt(v) : "null";
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        if (static_cast<unsigned char>(c) < 0x20) {
            out += "\\u0020";
            continue;
        }
        out += c;
    }
    return out;
}

const char* model_token(SpectrumModel m) {
    switch (m) {
    case SpectrumModel::unconfined: return "unconfined";
    case SpectrumModel::unconfined_nonrel: return "unconfined_nonrel";
    case SpectrumModel::hardwall: return "hardwall";
    case SpectrumModel::hardwall_nonrel: return "hardwall_nonrel";
    case SpectrumModel::oracle_unconfined: return "oracle_unconfined";
    case SpectrumModel::oracle_hardwall: return "oracle_hardwall";
    }
    return "unknown";
}

SpectrumModel parse_model(const std::string& token) {
    if (token == "unconfined")
        return SpectrumModel::unconfined;
    if (token == "unconfined_nonrel")
        return SpectrumModel::unconfined_nonrel;
    if (token == "hardwall")
        return SpectrumModel::hardwall;
    if (token == "hardwall_nonrel")
        return SpectrumModel::hardwall_nonrel;
    throw ConfigError("unknown model: " + token +
                      " (expected unconfined, unconfined_nonrel, hardwall, hardwall_nonrel)");
}

OutputFormat parse_format(const std::string& token) {
    if (token == "csv")
        return OutputFormat::csv;
    if (token == "json")
        return OutputFormat::json;
    throw ConfigError("unknown format: " + token + " (expected csv or json)");
}

const char* flag_token(RegimeFlag f) {
    switch (f) {
    case RegimeFlag::ok: return "true";
    case RegimeFlag::exceeded: return "false";
    case RegimeFlag::not_applicable: return "na";
    }
    return "na";
}

const char* flag_json(RegimeFlag f) {
    switch (f) {
    case RegimeFlag::ok: return "true";
    case RegimeFlag::exceeded: return "false";
    case RegimeFlag::not_applicable: return "null";
    }
    return "null";
}

std::string spins_csv(const std::vector<int>& spins) {
    std::string out;
    for (std::size_t i = 0; i < spins.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(spins[i]);
    }
    return out;
}

std::string spins_json(const std::vector<int>& spins) {
    return "[" + spins_csv(spins) + "]";
}

std::string physical_csv_line(const RunConfig& run) {
    return "# mass=" + fmt(run.mass) + " omega0=" + fmt(run.omega0) + " omega=" + fmt(run.omega) +
           " eta=" + fmt(run.eta) + "\n";
}

std::string physical_json_fields(const RunConfig& run) {
    return "\"mass\":" + fmt_json(run.mass) + ",\"omega0\":" + fmt_json(run.omega0) +
           ",\"omega\":" + fmt_json(run.omega) + ",\"eta\":" + fmt_json(run.eta);
}

double median_of(std::vector<double> values) {
    if (values.empty())
        return std::numeric_limits<double>::quiet_NaN();
    std::sort(values.begin(), values.end());
    const std::size_t m = values.size() / 2;
    return values.size() % 2 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

std::vector<int> normalized_spins(const RunConfig& run) {
    std::vector<int> spins = run.spins;
    std::sort(spins.begin(), spins.end());
    spins.erase(std::unique(spins.begin(), spins.end()), spins.end());
    return spins;
}

} // namespace

PhysicalConfig RunConfig::physical() const {
    return PhysicalConfig(mass, omega0, omega, eta);
}

void RunConfig::validate() const {
    physical();
    if (n_max < 0)
        throw ConfigError("n_max must be >= 0");
    if (l_min > l_max)
        throw ConfigError("l_min must not exceed l_max");
    if (spins.empty())
        throw ConfigError("at least one spin required");
    for (int s : spins)
        if (s != 1 && s != -1)
            throw ConfigError("spin entries must be +1 or -1, got " + std::to_string(s));
    if (oracle_grid < 200)
        throw ConfigError("oracle_grid must be >= 200");
    if (!(grid_tolerance > 0.0))
        throw ConfigError("grid_tolerance must be positive");
    if (count < -1)
        throw ConfigError("count must be >= 0");
    if (samples < 2)
        throw ConfigError("samples must be >= 2");
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config file parse error: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("config file root must be a JSON object");
    RunConfig run;
    try {
        for (const auto& [key, value] : doc.items()) {
            if (key == "mass")
                run.mass = value.get<double>();
            else if (key == "omega0")
                run.omega0 = value.get<double>();
            else if (key == "omega")
                run.omega = value.get<double>();
            else if (key == "eta")
                run.eta = value.get<double>();
            else if (key == "n_max")
                run.n_max = value.get<int>();
            else if (key == "l_min")
                run.l_min = value.get<int>();
            else if (key == "l_max")
                run.l_max = value.get<int>();
            else if (key == "spins")
                run.spins = value.get<std::vector<int>>();
            else if (key == "model")
                run.model = parse_model(value.get<std::string>());
            else if (key == "output_format")
                run.format = parse_format(value.get<std::string>());
            else if (key == "skip_nonphysical")
                run.skip_nonphysical = value.get<bool>();
            else if (key == "oracle_grid")
                run.oracle_grid = value.get<int>();
            else if (key == "grid_tolerance")
                run.grid_tolerance = value.get<double>();
            else if (key == "count")
                run.count = value.get<int>();
            else if (key == "samples")
                run.samples = value.get<int>();
            else
                throw ConfigError("unknown config key: " + key);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config file type error: ") + e.what());
    }
    return run;
}

std::string cmd_spectrum(const RunConfig& run) {
    const PhysicalConfig phys = run.physical();
    SpectrumRequest request;
    request.n_max = run.n_max;
    request.l_min = run.l_min;
    request.l_max = run.l_max;
    request.spins = normalized_spins(run);
    request.model = run.model;
    request.policy = run.skip_nonphysical ? SkipPolicy::keep_flagged : SkipPolicy::strict;
    const auto rows = spectrum_table(phys, request);
    const RegimeReport regime = regime_check(phys);

    std::string out;
    if (run.format == OutputFormat::csv) {
        out += "# csdo spectrum\n";
        out += physical_csv_line(run);
        out += "# model=" + std::string(model_token(run.model)) +
               " n_max=" + std::to_string(run.n_max) + " l_min=" + std::to_string(run.l_min) +
               " l_max=" + std::to_string(run.l_max) + " spins=" + spins_csv(request.spins) +
               " skip_nonphysical=" + (run.skip_nonphysical ? "true" : "false") + "\n";
        out += "model,n,l,s,branch,zeta,delta,nu,energy,status,case1,case2\n";
        for (const auto& row : rows) {
            out += model_token(row.model);
            out += ',' + std::to_string(row.qn.n) + ',' + std::to_string(row.qn.l) + ',' +
                   std::to_string(row.qn.spin) + ',';
            out += row.qn.branch == Branch::particle ? "particle" : "antiparticle";
            out += ',' + fmt(row.params.zeta) + ',' + fmt(row.params.delta) + ',' + fmt(row.nu) +
                   ',' + fmt(row.energy) + ',';
            out += row.physical ? "ok" : "nonphysical";
            out += ',' + std::string(flag_token(row.regime.case1)) + ',' +
                   flag_token(row.regime.case2) + '\n';
        }
        out += "# rows=" + std::to_string(rows.size()) +
               " case1_ratio=" + fmt(regime.case1_ratio) +
               " case2_value=" + fmt(regime.case2_value) + "\n";
        return out;
    }

    out += "{\"meta\":{\"command\":\"spectrum\"," + physical_json_fields(run);
    out += ",\"model\":\"" + std::string(model_token(run.model)) + "\"";
    out += ",\"n_max\":" + std::to_string(run.n_max) + ",\"l_min\":" + std::to_string(run.l_min) +
           ",\"l_max\":" + std::to_string(run.l_max) + ",\"spins\":" + spins_json(request.spins);
    out += ",\"skip_nonphysical\":";
    out += run.skip_nonphysical ? "true" : "false";
    out += ",\"case1_ratio\":" + fmt_json(regime.case1_ratio) +
           ",\"case2_value\":" + fmt_json(regime.case2_value) + "},\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (i)
            out += ',';
        out += "{\"model\":\"" + std::string(model_token(row.model)) + "\"";
        out += ",\"n\":" + std::to_string(row.qn.n) + ",\"l\":" + std::to_string(row.qn.l) +
               ",\"s\":" + std::to_string(row.qn.spin);
        out += ",\"branch\":\"";
        out += row.qn.branch == Branch::particle ? "particle" : "antiparticle";
        out += "\",\"zeta\":" + fmt_json(row.params.zeta) +
               ",\"delta\":" + fmt_json(row.params.delta) + ",\"nu\":" + fmt_json(row.nu) +
               ",\"energy\":" + fmt_json(row.energy);
        out += ",\"status\":\"";
        out += row.physical ? "ok" : "nonphysical";
        out += "\",\"case1\":" + std::string(flag_json(row.regime.case1)) +
               ",\"case2\":" + flag_json(row.regime.case2) + "}";
    }
    out += "],\"row_count\":" + std::to_string(rows.size()) + "}\n";
    return out;
}

std::string cmd_compare(const RunConfig& run) {
    if (run.model != SpectrumModel::unconfined && run.model != SpectrumModel::hardwall)
        throw ConfigError("compare supports the relativistic models unconfined and hardwall");
    const PhysicalConfig phys = run.physical();
    const int count = run.count < 0 ? run.n_max + 1 : run.count;
    const auto spins = normalized_spins(run);

    struct Row {
        int n, l, s;
        double nu_analytic, nu_oracle, deviation;
    };
    std::vector<Row> rows;
    std::vector<double> abs_devs;
    std::vector<double> orders;
    bool has_order = false;
    bool monotone = true;
    bool monotone_defined = false;

    for (int s : spins) {
        for (int l = run.l_min; l <= run.l_max; ++l) {
            if (count == 0)
                continue;
            const QuantumNumbers anchor(0, l, s);
            OracleResult oracle =
                run.model == SpectrumModel::unconfined
                    ? radial_operator_eigenvalues(phys, anchor, count, OracleDomain::unconfined,
                                                  run.oracle_grid, run.grid_tolerance)
                    : exact_hardwall_roots(phys, anchor, count);
            if (std::isfinite(oracle.convergence_order)) {
                orders.push_back(oracle.convergence_order);
                has_order = true;
            }
            double prev_abs = 0.0;
            for (int n = 0; n < count; ++n) {
                const QuantumNumbers qn(n, l, s);
                const double nu_a = run.model == SpectrumModel::unconfined
                                        ? quantized_nu_unconfined(phys, qn)
                                        : hardwall_nu(phys, qn);
                const double nu_o = oracle.nu[n];
                const double dev = (nu_a - nu_o) / nu_o;
                rows.push_back(Row{n, l, s, nu_a, nu_o, dev});
                abs_devs.push_back(std::abs(dev));
                if (n > 0) {
                    monotone_defined = true;
                    if (!(std::abs(dev) < prev_abs))
                        monotone = false;
                }
                prev_abs = std::abs(dev);
            }
        }
    }

    double max_dev = std::numeric_limits<double>::quiet_NaN();
    if (!abs_devs.empty())
        max_dev = *std::max_element(abs_devs.begin(), abs_devs.end());
    const double med_dev = median_of(abs_devs);
    const double order = median_of(orders);
    const char* model_tok = model_token(run.model);

    std::string out;
    if (run.format == OutputFormat::csv) {
        out += "# csdo compare\n";
        out += physical_csv_line(run);
        out += "# model=" + std::string(model_tok) + " count=" + std::to_string(count) +
               " oracle_grid=" + std::to_string(run.oracle_grid) +
               " grid_tolerance=" + fmt(run.grid_tolerance) + "\n";
        out += "model,n,l,s,nu_analytic,nu_oracle,rel_deviation\n";
        for (const auto& row : rows) {
            out += model_tok;
            out += ',' + std::to_string(row.n) + ',' + std::to_string(row.l) + ',' +
                   std::to_string(row.s) + ',' + fmt(row.nu_analytic) + ',' + fmt(row.nu_oracle) +
                   ',' + fmt(row.deviation) + '\n';
        }
        out += "# summary rows=" + std::to_string(rows.size()) +
               " max_rel_deviation=" + fmt(max_dev) + " median_rel_deviation=" + fmt(med_dev) +
               " convergence_order=" + (has_order ? fmt(order) : "na") + " monotone_decreasing=" +
               (monotone_defined ? (monotone ? "true" : "false") : "na") + "\n";
        return out;
    }

    out += "{\"meta\":{\"command\":\"compare\"," + physical_json_fields(run);
    out += ",\"model\":\"" + std::string(model_tok) + "\",\"count\":" + std::to_string(count) +
           ",\"oracle_grid\":" + std::to_string(run.oracle_grid) +
           ",\"grid_tolerance\":" + fmt_json(run.grid_tolerance) + "},\"rows\":[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (i)
            out += ',';
        out += "{\"model\":\"" + std::string(model_tok) + "\",\"n\":" + std::to_string(row.n) +
               ",\"l\":" + std::to_string(row.l) + ",\"s\":" + std::to_string(row.s) +
               ",\"nu_analytic\":" + fmt_json(row.nu_analytic) +
               ",\"nu_oracle\":" + fmt_json(row.nu_oracle) +
               ",\"rel_deviation\":" + fmt_json(row.deviation) + "}";
    }
    out += "],\"summary\":{\"rows\":" + std::to_string(rows.size()) +
           ",\"max_rel_deviation\":" + fmt_json(max_dev) +
           ",\"median_rel_deviation\":" + fmt_json(med_dev) + ",\"convergence_order\":" +
           (has_order ? fmt_json(order) : "null") + ",\"monotone_decreasing\":" +
           (monotone_defined ? (monotone ? "true" : "false") : "null") + "}}\n";
    return out;
}

std::string cmd_wavefunction(const RunConfig& run, int n, int l, int spin) {
    const PhysicalConfig phys = run.physical();
    const QuantumNumbers qn(n, l, spin);
    const auto params = DerivedParams::from(phys, qn);

    double nu = 0.0;
    double rho_end = 0.0;
    if (run.model == SpectrumModel::unconfined) {
        nu = quantized_nu_unconfined(phys, qn);
        rho_end = std::sqrt(80.0 / (phys.mass * phys.omega0 * params.delta));
    } else if (run.model == SpectrumModel::hardwall) {
        // The exact root, not the cosine approximation: only a true
        // eigenfunction vanishes at the wall and carries n interior nodes.
        nu = exact_hardwall_roots(phys, qn, n + 1).nu.back();
        rho_end = params.rho0;
    } else {
        throw ConfigError("wavefunction supports the relativistic models unconfined and hardwall");
    }

    std::vector<double> grid(run.samples);
    for (int i = 0; i < run.samples; ++i)
        grid[i] = rho_end * (i + 1) / run.samples;
    WavefunctionSample sample = evaluate_wavefunction(phys, qn, nu, std::move(grid));
    const double raw_norm = sample.norm;
    sample = normalize_and_tail(std::move(sample), params.rho0);

    std::string out;
    if (run.format == OutputFormat::csv) {
        out += "# csdo wavefunction\n";
        out += physical_csv_line(run);
        out += "# model=" + std::string(model_token(run.model)) + " n=" + std::to_string(n) +
               " l=" + std::to_string(l) + " s=" + std::to_string(spin) + " nu=" + fmt(nu) +
               " raw_norm=" + fmt(raw_norm) + " tail_mass=" + fmt(sample.tail_mass) +
               " samples=" + std::to_string(run.samples) + "\n";
        out += "rho,value\n";
        for (std::size_t i = 0; i < sample.rho.size(); ++i)
            out += fmt(sample.rho[i]) + ',' + fmt(sample.value[i]) + '\n';
        return out;
    }

    out += "{\"meta\":{\"command\":\"wavefunction\"," + physical_json_fields(run);
    out += ",\"model\":\"" + std::string(model_token(run.model)) + "\",\"n\":" + std::to_string(n) +
           ",\"l\":" + std::to_string(l) + ",\"s\":" + std::to_string(spin) +
           ",\"nu\":" + fmt_json(nu) + ",\"raw_norm\":" + fmt_json(raw_norm) +
           ",\"tail_mass\":" + fmt_json(sample.tail_mass) +
           ",\"samples\":" + std::to_string(run.samples) + "},\"rows\":[";
    for (std::size_t i = 0; i < sample.rho.size(); ++i) {
        if (i)
            out += ',';
        out += "{\"rho\":" + fmt_json(sample.rho[i]) + ",\"value\":" + fmt_json(sample.value[i]) +
               "}";
    }
    out += "],\"row_count\":" + std::to_string(sample.rho.size()) + "}\n";
    return out;
}

std::string cmd_regimes(const RunConfig& run) {
    run.physical();
    const RegimeReport regime = regime_check(run.physical());

    std::string out;
    if (run.format == OutputFormat::csv) {
        out += "# csdo regimes\n";
        out += physical_csv_line(run);
        out += "name,value,flag\n";
        out += "case1_ratio," + fmt(regime.case1_ratio) + ',' + flag_token(regime.case1) + '\n';
        out += "case2_value," + fmt(regime.case2_value) + ',' + flag_token(regime.case2) + '\n';
        out += "# notes=" + regime.notes + "\n";
        return out;
    }

    out += "{\"meta\":{\"command\":\"regimes\"," + physical_json_fields(run) + "}";
    out += ",\"case1_ratio\":" + fmt_json(regime.case1_ratio) +
           ",\"case1_ok\":" + std::string(flag_json(regime.case1)) +
           ",\"case2_value\":" + fmt_json(regime.case2_value) +
           ",\"case2_ok\":" + std::string(flag_json(regime.case2)) + ",\"notes\":\"" +
           json_escape(regime.notes) + "\"}\n";
    return out;
}

namespace {

struct FlagValues {
    std::string config_path;
    double mass = 1.0, omega0 = 0.0, omega = 0.0, eta = 1.0;
    int n_max = 0, l_min = 0, l_max = 0;
    std::vector<int> spins;
    std::string model, format;
    bool skip_nonphysical = false;
    int oracle_grid = 2000;
    double grid_tolerance = 1e-4;
    int count = -1;
    int samples = 512;
    int wf_n = 0, wf_l = 0;
};

struct OptionRefs {
    CLI::Option* mass = nullptr;
    CLI::Option* omega0 = nullptr;
    CLI::Option* omega = nullptr;
    CLI::Option* eta = nullptr;
    CLI::Option* n_max = nullptr;
    CLI::Option* l_min = nullptr;
    CLI::Option* l_max = nullptr;
    CLI::Option* spin = nullptr;
    CLI::Option* model = nullptr;
    CLI::Option* format = nullptr;
    CLI::Option* skip = nullptr;
    CLI::Option* oracle_grid = nullptr;
    CLI::Option* grid_tolerance = nullptr;
    CLI::Option* count = nullptr;
    CLI::Option* samples = nullptr;
};

OptionRefs add_common_options(CLI::App* cmd, FlagValues& f) {
    OptionRefs o;
    cmd->add_option("--config", f.config_path, "JSON config file; flags override its values");
    o.mass = cmd->add_option("--mass", f.mass, "particle mass m > 0");
    o.omega0 = cmd->add_option("--omega0", f.omega0, "oscillator frequency >= 0");
    o.omega = cmd->add_option("--omega", f.omega, "frame angular velocity >= 0");
    o.eta = cmd->add_option("--eta", f.eta, "deficit parameter in (0, 1]");
    o.n_max = cmd->add_option("--n-max", f.n_max, "largest radial quantum number");
    o.l_min = cmd->add_option("--l-min", f.l_min, "smallest orbital quantum number");
    o.l_max = cmd->add_option("--l-max", f.l_max, "largest orbital quantum number");
    o.spin = cmd->add_option("--spin", f.spins, "spin labels, +1 or -1 (repeatable)")
                 ->delimiter(',');
    o.model = cmd->add_option("--model", f.model,
                              "unconfined, unconfined_nonrel, hardwall or hardwall_nonrel");
    o.format = cmd->add_option("--format", f.format, "csv or json");
    o.skip = cmd->add_flag("--skip-nonphysical", f.skip_nonphysical,
                           "flag nonphysical levels instead of failing");
    o.oracle_grid = cmd->add_option("--oracle-grid", f.oracle_grid, "finest grid (>= 200)");
    o.grid_tolerance = cmd->add_option("--grid-tol", f.grid_tolerance,
                                       "max relative Richardson correction");
    o.count = cmd->add_option("--count", f.count, "compare: levels per (l, s)");
    o.samples = cmd->add_option("--samples", f.samples, "wavefunction: grid points (>= 2)");
    return o;
}

RunConfig merge_run_config(const FlagValues& f, const OptionRefs& o) {
    RunConfig run;
    if (!f.config_path.empty())
        run = load_config_file(f.config_path);
    if (o.mass->count())
        run.mass = f.mass;
    if (o.omega0->count())
        run.omega0 = f.omega0;
    if (o.omega->count())
        run.omega = f.omega;
    if (o.eta->count())
        run.eta = f.eta;
    if (o.n_max->count())
        run.n_max = f.n_max;
    if (o.l_min->count())
        run.l_min = f.l_min;
    if (o.l_max->count())
        run.l_max = f.l_max;
    if (o.spin->count())
        run.spins = f.spins;
    if (o.model->count())
        run.model = parse_model(f.model);
    if (o.format->count())
        run.format = parse_format(f.format);
    if (o.skip->count())
        run.skip_nonphysical = f.skip_nonphysical;
    if (o.oracle_grid->count())
        run.oracle_grid = f.oracle_grid;
    if (o.grid_tolerance->count())
        run.grid_tolerance = f.grid_tolerance;
    if (o.count->count())
        run.count = f.count;
    if (o.samples->count())
        run.samples = f.samples;
    run.validate();
    return run;
}

} // namespace

int run_main(int argc, const char* const* argv) {
    CLI::App app{"Bound-state spectra of a Dirac oscillator in a rotating frame on a conical "
                 "space: closed forms, numerical cross-checks, wavefunctions"};
    app.require_subcommand(1);

    FlagValues f;
    auto* spectrum = app.add_subcommand("spectrum", "closed-form energy table");
    auto spectrum_opts = add_common_options(spectrum, f);
    auto* compare = app.add_subcommand("compare", "closed form vs independent numerics");
    auto compare_opts = add_common_options(compare, f);
    auto* wavefunction = app.add_subcommand("wavefunction", "radial eigenfunction samples");
    auto wavefunction_opts = add_common_options(wavefunction, f);
    wavefunction->add_option("--n", f.wf_n, "radial quantum number")->required();
    wavefunction->add_option("--l", f.wf_l, "orbital quantum number")->required();
    auto* regimes = app.add_subcommand("regimes", "approximation-regime report");
    auto regimes_opts = add_common_options(regimes, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        std::string payload;
        if (spectrum->parsed()) {
            payload = cmd_spectrum(merge_run_config(f, spectrum_opts));
        } else if (compare->parsed()) {
            payload = cmd_compare(merge_run_config(f, compare_opts));
        } else if (wavefunction->parsed()) {
            const RunConfig run = merge_run_config(f, wavefunction_opts);
            if (run.spins.size() != 1)
                throw ConfigError("wavefunction needs exactly one --spin");
            payload = cmd_wavefunction(run, f.wf_n, f.wf_l, run.spins[0]);
        } else if (regimes->parsed()) {
            payload = cmd_regimes(merge_run_config(f, regimes_opts));
        }
        std::cout << payload;
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ZeroFrequency& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const UnboundedDomain& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NonPositiveDiscriminant& e) {
        std::cerr << "nonphysical parameters: " << e.what() << "\n";
        return 3;
    } catch (const NonPhysicalRadicand& e) {
        std::cerr << "nonphysical parameters: " << e.what() << "\n";
        return 3;
    } catch (const GridTooCoarse& e) {
        std::cerr << "oracle did not converge: " << e.what() << "\n";
        return 4;
    } catch (const NoConvergence& e) {
        std::cerr << "oracle did not converge: " << e.what() << "\n";
        return 4;
    } catch (const NoSignChange& e) {
        std::cerr << "oracle did not converge: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace csdo::cli
