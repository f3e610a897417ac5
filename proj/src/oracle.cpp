#include "csdo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "csdo/kummer.hpp"

namespace csdo {

namespace {

constexpr double kXiCutoff = 80.0;        // e^{-xi/2} < 1e-17 beyond this
constexpr double kRootScanStep = 0.25;    // in lambda = nu / (4 m w0 delta)
constexpr double kRootScanCap = 1.0e4;
constexpr double kRootBisectTol = 1.0e-12;

const double kNaN = std::numeric_limits<double>::quiet_NaN();

struct SymTridiag {
    std::vector<double> diag;
    std::vector<double> off;  // off[i] couples nodes i and i+1
};

/// Staggered finite volume for the conservation form on y = R / rho^alpha:
///   -(p y')' + c^2 rho^2 p y = nu p y,  p(rho) = rho^(2 alpha + 1),
/// nodes at rho_i = (i + 1/2) h, fluxes at the interfaces i h. p(0) = 0
/// closes the axis without a boundary condition; the outer Dirichlet wall
/// enters through ghost reflection y_M = -y_{M-1}. The similarity scaling
/// by sqrt(p(rho_i)) makes the matrix symmetric; entries are formed from
/// index ratios so large alpha cannot underflow.
SymTridiag build_radial_matrix(double alpha, double c, double rho_max, int points) {
    const double h = rho_max / points;
    const double p_exp = 2.0 * alpha + 1.0;
    SymTridiag t;
    t.diag.resize(points);
    t.off.resize(points - 1);
    for (int i = 0; i < points; ++i) {
        const double center = i + 0.5;
        const double lower = std::pow(i / center, p_exp);
        const double upper = std::pow((i + 1) / center, p_exp);
        const double wall = (i == points - 1) ? 2.0 : 1.0;
        const double rho = center * h;
        t.diag[i] = (lower + wall * upper) / (h * h) + c * c * rho * rho;
        if (i + 1 < points) {
            const double ratio =
                (static_cast<double>(i + 1) * (i + 1)) / (center * (i + 1.5));
            t.off[i] = -std::pow(ratio, 0.5 * p_exp) / (h * h);
        }
    }
    return t;
}

/// Number of eigenvalues strictly below x (Sturm count on the shifted LDL^T).
int eigen_count_below(const SymTridiag& t, double x) {
    int count = 0;
    double q = 1.0;
    const int n = static_cast<int>(t.diag.size());
    for (int i = 0; i < n; ++i) {
        const double e2 = (i > 0) ? t.off[i - 1] * t.off[i - 1] : 0.0;
        const double den = (q == 0.0) ? std::numeric_limits<double>::denorm_min() : q;
        q = (t.diag[i] - x) - e2 / den;
        if (q < 0.0)
            ++count;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const SymTridiag& t, int count) {
    const int n = static_cast<int>(t.diag.size());
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i) {
        const double radius = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
                              (i + 1 < n ? std::abs(t.off[i]) : 0.0);
        lo = std::min(lo, t.diag[i] - radius);
        hi = std::max(hi, t.diag[i] + radius);
    }
    const double pad = 1e-12 * (hi - lo) + 1e-300;
    lo -= pad;
    hi += pad;
    std::vector<double> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        double a = lo, b = hi;
        for (int it = 0; it < 300; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid == a || mid == b)
                break;
            if (eigen_count_below(t, mid) > k)
                b = mid;
            else
                a = mid;
            if (b - a <= 1e-13 * std::max(std::abs(a), std::abs(b)))
                break;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

/// Solves (T - sigma I) x = rhs by Gaussian elimination with partial
/// pivoting; pivoting introduces one fill-in superdiagonal.
std::vector<double> solve_shifted(const SymTridiag& t, double sigma, std::vector<double> rhs) {
    const int n = static_cast<int>(t.diag.size());
    std::vector<double> sub(n, 0.0), dia(n), sup(n, 0.0), fil(n, 0.0);
    for (int i = 0; i < n; ++i)
        dia[i] = t.diag[i] - sigma;
    for (int i = 0; i + 1 < n; ++i) {
        sup[i] = t.off[i];
        sub[i + 1] = t.off[i];
    }
    const double tiny = std::numeric_limits<double>::min();
    for (int k = 0; k + 1 < n; ++k) {
        if (std::abs(sub[k + 1]) > std::abs(dia[k])) {
            std::swap(dia[k], sub[k + 1]);
            std::swap(sup[k], dia[k + 1]);
            if (k + 2 < n)
                std::swap(fil[k], sup[k + 1]);
            std::swap(rhs[k], rhs[k + 1]);
        }
        if (dia[k] == 0.0)
            dia[k] = tiny;
        const double mult = sub[k + 1] / dia[k];
        dia[k + 1] -= mult * sup[k];
        if (k + 2 < n)
            sup[k + 1] -= mult * fil[k];
        rhs[k + 1] -= mult * rhs[k];
    }
    if (dia[n - 1] == 0.0)
        dia[n - 1] = tiny;
    std::vector<double> x(n);
    x[n - 1] = rhs[n - 1] / dia[n - 1];
    if (n > 1)
        x[n - 2] = (rhs[n - 2] - sup[n - 2] * x[n - 1]) / dia[n - 2];
    for (int i = n - 3; i >= 0; --i)
        x[i] = (rhs[i] - sup[i] * x[i + 1] - fil[i] * x[i + 2]) / dia[i];
    return x;
}

/// Relative eigen-residual via a few inverse-iteration steps at the
/// bisected eigenvalue. The start vector is a fixed xorshift sequence so
/// results are bit-stable across platforms.
double relative_residual(const SymTridiag& t, double lambda) {
    const int n = static_cast<int>(t.diag.size());
    std::vector<double> v(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int i = 0; i < n; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        v[i] = static_cast<double>(state >> 11) * 0x1.0p-52 - 1.0;
    }
    for (int pass = 0; pass < 3; ++pass) {
        v = solve_shifted(t, lambda, std::move(v));
        double peak = 0.0;
        for (double c : v)
            peak = std::max(peak, std::abs(c));
        if (peak == 0.0)
            break;
        for (double& c : v)
            c /= peak;
    }
    double norm2 = 0.0;
    for (double c : v)
        norm2 += c * c;
    const double norm = std::sqrt(norm2);
    double res2 = 0.0;
    for (int i = 0; i < n; ++i) {
        double y = (t.diag[i] - lambda) * v[i];
        if (i > 0)
            y += t.off[i - 1] * v[i - 1];
        if (i + 1 < n)
            y += t.off[i] * v[i + 1];
        res2 += y * y;
    }
    const double scale = std::max(std::abs(lambda), std::numeric_limits<double>::min());
    return std::sqrt(res2) / (norm * scale);
}

double median(std::vector<double> values) {
    if (values.empty())
        return kNaN;
    std::sort(values.begin(), values.end());
    const std::size_t m = values.size() / 2;
    return values.size() % 2 ? values[m] : 0.5 * (values[m - 1] + values[m]);
}

/// Trapezoid of R^2 rho d rho over [0, rho_back]; the integrand vanishes at
/// the axis for every alpha >= 0, so the virtual origin point is exact.
double quadrature_norm(const std::vector<double>& rho, const std::vector<double>& value) {
    double total = 0.0, prev_rho = 0.0, prev_f = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
        const double f = value[i] * value[i] * rho[i];
        total += 0.5 * (prev_f + f) * (rho[i] - prev_rho);
        prev_rho = rho[i];
        prev_f = f;
    }
    return total;
}

} // namespace

OracleResult radial_operator_eigenvalues(const PhysicalConfig& config, const QuantumNumbers& qn,
                                         int count, OracleDomain domain, int grid_points,
                                         double grid_tolerance) {
    if (count < 0)
        throw DomainError("eigenvalue count must be >= 0, got " + std::to_string(count));
    if (grid_points < 200)
        throw DomainError("grid_points must be >= 200, got " + std::to_string(grid_points));
    if (!(grid_tolerance > 0.0))
        throw DomainError("grid_tolerance must be positive");

    const auto params = DerivedParams::from(config, qn);
    const double c = config.mass * config.omega0 * params.delta;
    double rho_max = 0.0;
    if (domain == OracleDomain::unconfined) {
        if (!(c > 0.0))
            throw ZeroFrequency("unconfined spectrum needs m*omega0*delta > 0");
        rho_max = std::sqrt(kXiCutoff / c);
    } else {
        if (!params.bounded())
            throw UnboundedDomain("dirichlet_at_rho0 needs omega > 0");
        rho_max = params.rho0;
    }

    const int fine = ((grid_points + 3) / 4) * 4;
    if (count > fine / 4 - 2)
        throw DomainError("count too large for the requested grid");

    OracleResult result;
    result.domain = domain;
    result.grid_points = fine;
    result.rho_max = rho_max;
    result.convergence_order = kNaN;
    if (count == 0)
        return result;

    const auto matrix_fine = build_radial_matrix(params.alpha, c, rho_max, fine);
    result.nu_fine = lowest_eigenvalues(matrix_fine, count);
    result.nu_half = lowest_eigenvalues(build_radial_matrix(params.alpha, c, rho_max, fine / 2), count);
    const auto nu_quarter =
        lowest_eigenvalues(build_radial_matrix(params.alpha, c, rho_max, fine / 4), count);

    result.nu.resize(count);
    double worst_correction = 0.0;
    std::vector<double> orders;
    for (int k = 0; k < count; ++k) {
        const double step = result.nu_fine[k] - result.nu_half[k];
        result.nu[k] = result.nu_fine[k] + step / 3.0;
        const double scale = std::max(std::abs(result.nu[k]), std::numeric_limits<double>::min());
        worst_correction = std::max(worst_correction, std::abs(step) / (3.0 * scale));
        const double prev_step = result.nu_half[k] - nu_quarter[k];
        if (step != 0.0) {
            const double ratio = prev_step / step;
            if (ratio > 1.0)
                orders.push_back(std::log2(ratio));
        }
    }
    result.convergence_order = median(std::move(orders));

    result.residuals.resize(count);
    for (int k = 0; k < count; ++k)
        result.residuals[k] = relative_residual(matrix_fine, result.nu_fine[k]);

    if (worst_correction > grid_tolerance)
        throw GridTooCoarse("relative Richardson correction " + std::to_string(worst_correction) +
                            " exceeds tolerance " + std::to_string(grid_tolerance) +
                            " at grid " + std::to_string(fine));
    return result;
}

OracleResult exact_hardwall_roots(const PhysicalConfig& config, const QuantumNumbers& qn,
                                  int count) {
    if (count < 0)
        throw DomainError("root count must be >= 0, got " + std::to_string(count));
    const auto params = DerivedParams::from(config, qn);
    if (!params.bounded())
        throw UnboundedDomain("hard-wall roots need omega > 0");
    const double c = config.mass * config.omega0 * params.delta;
    if (!(c > 0.0))
        throw ZeroFrequency("hard-wall roots need m*omega0*delta > 0");

    const double b = params.alpha + 1.0;
    const double a0 = params.alpha / 2.0 + 0.5;
    const auto wall_value = [&](double lambda) { return kummer_series(a0 - lambda, b, params.xi0); };

    OracleResult result;
    result.domain = OracleDomain::dirichlet_at_rho0;
    result.grid_points = 0;
    result.rho_max = params.rho0;
    result.convergence_order = kNaN;
    if (count == 0)
        return result;

    // Genuine wall eigenvalues are convex in n: the gap between consecutive
    // roots in lambda never shrinks (equal oscillator spacing at one end,
    // quadratically growing wall spacing at the other). Deep cancellation in
    // the alternating series eventually drowns the wall value in rounding
    // noise whose sign flips at scan-step scale; a gap collapsing below half
    // its predecessor is that noise, not a root, and the scan refuses.
    std::vector<double> lambda_roots;
    const auto accept_root = [&](double root) {
        if (lambda_roots.size() >= 2) {
            const std::size_t k = lambda_roots.size();
            const double prev_gap = lambda_roots[k - 1] - lambda_roots[k - 2];
            if (root - lambda_roots[k - 1] < 0.5 * prev_gap)
                throw NoConvergence(
                    "wall-value sign changes collapsed near lambda=" + std::to_string(root) +
                    ": series cancellation noise; found " + std::to_string(result.nu.size()) +
                    " of " + std::to_string(count) + " trustworthy roots");
        }
        lambda_roots.push_back(root);
        result.nu.push_back(4.0 * c * root);
    };

    double prev_lambda = 0.0;
    double prev_value = wall_value(0.0);
    for (double lambda = kRootScanStep; lambda <= kRootScanCap + 1e-9 && static_cast<int>(result.nu.size()) < count;
         lambda += kRootScanStep) {
        const double value = wall_value(lambda);
        if (prev_value == 0.0) {
            accept_root(prev_lambda);
            result.residuals.push_back(0.0);
        } else if (prev_value * value < 0.0) {
            double lo = prev_lambda, hi = lambda;
            double f_lo = prev_value;
            for (int it = 0; it < 200 && hi - lo > kRootBisectTol; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid == lo || mid == hi)
                    break;
                const double f_mid = wall_value(mid);
                if (f_mid == 0.0) {
                    lo = hi = mid;
                } else if ((f_mid > 0.0) == (f_lo > 0.0)) {
                    lo = mid;
                    f_lo = f_mid;
                } else {
                    hi = mid;
                }
            }
            const double root = 0.5 * (lo + hi);
            accept_root(root);
            result.residuals.push_back(std::abs(wall_value(root)));
        }
        prev_lambda = lambda;
        prev_value = value;
    }
    if (static_cast<int>(result.nu.size()) < count)
        throw NoSignChange("found " + std::to_string(result.nu.size()) + " of " +
                           std::to_string(count) + " roots before the scan cap lambda=1e4");
    return result;
}

WavefunctionSample evaluate_wavefunction(const PhysicalConfig& config, const QuantumNumbers& qn,
                                         double nu, std::vector<double> rho_grid) {
    const auto params = DerivedParams::from(config, qn);
    const double c = config.mass * config.omega0 * params.delta;
    if (!(c > 0.0))
        throw ZeroFrequency("wavefunction evaluation needs m*omega0*delta > 0");
    double prev = 0.0;
    for (double r : rho_grid) {
        if (!(r > prev) || !std::isfinite(r))
            throw DomainError("rho grid must be strictly increasing and positive");
        prev = r;
    }
    const double a = params.alpha / 2.0 + 0.5 - nu / (4.0 * c);
    const double b = params.alpha + 1.0;
    WavefunctionSample sample;
    sample.rho = std::move(rho_grid);
    sample.value.reserve(sample.rho.size());
    for (double r : sample.rho) {
        const double xi = c * r * r;
        sample.value.push_back(std::exp(-xi / 2.0) * std::pow(xi, params.alpha / 2.0) *
                               kummer(a, b, xi));
    }
    sample.norm = quadrature_norm(sample.rho, sample.value);
    sample.tail_mass = 0.0;
    return sample;
}

WavefunctionSample normalize_and_tail(WavefunctionSample sample, double rho0) {
    const double total = quadrature_norm(sample.rho, sample.value);
    if (!(total > 0.0) || !std::isfinite(total))
        throw ZeroNorm("sample norm is not positive and finite");

    double tail = 0.0;
    double prev_rho = 0.0, prev_f = 0.0;
    for (std::size_t i = 0; i < sample.rho.size(); ++i) {
        const double f = sample.value[i] * sample.value[i] * sample.rho[i];
        const double r = sample.rho[i];
        if (rho0 <= prev_rho) {
            tail += 0.5 * (prev_f + f) * (r - prev_rho);
        } else if (rho0 < r) {
            const double t = (rho0 - prev_rho) / (r - prev_rho);
            const double f_cut = prev_f + t * (f - prev_f);
            tail += 0.5 * (f_cut + f) * (r - rho0);
        }
        prev_rho = r;
        prev_f = f;
    }

    const double scale = 1.0 / std::sqrt(total);
    for (double& v : sample.value)
        v *= scale;
    sample.norm = 1.0;
    sample.tail_mass = std::clamp(tail / total, 0.0, 1.0);
    return sample;
}

} // namespace csdo
