#include "csdo/kummer.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

namespace csdo {

namespace {

constexpr double kTermTolerance = 1e-16;
constexpr int kConsecutiveSmall = 3;
constexpr long kTermCap = 1000000;

bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::floor(v);
}

void check_series_domain(double b, double x) {
    if (is_nonpositive_integer(b))
        throw PoleAtB("series pole: b = " + std::to_string(b));
    if (x < 0.0 || !std::isfinite(x))
        throw DomainError("kummer argument must be finite and >= 0, got " + std::to_string(x));
}

} // namespace

double kummer_series(double a, double b, double x) {
    check_series_domain(b, x);
    long double term = 1.0L;
    long double sum = 1.0L;
    int small_streak = 0;
    for (long k = 0; k < kTermCap; ++k) {
        term *= (static_cast<long double>(a) + k) * x /
                ((static_cast<long double>(b) + k) * (k + 1));
        sum += term;
        if (!std::isfinite(sum))
            throw NoConvergence("kummer series overflowed at a=" + std::to_string(a) +
                                " b=" + std::to_string(b) + " x=" + std::to_string(x));
        if (std::abs(term) <= kTermTolerance * std::abs(sum)) {
            if (++small_streak >= kConsecutiveSmall)
                return static_cast<double>(sum);
        } else {
            small_streak = 0;
        }
    }
    throw NoConvergence("kummer series hit the term cap at a=" + std::to_string(a) +
                        " b=" + std::to_string(b) + " x=" + std::to_string(x));
}

double kummer_polynomial(int n, double b, double x) {
    if (n < 0)
        throw DomainError("polynomial degree must be >= 0, got " + std::to_string(n));
    check_series_domain(b, x);
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 0; k < n; ++k) {
        term *= (static_cast<long double>(-n) + k) * x /
                ((static_cast<long double>(b) + k) * (k + 1));
        sum += term;
    }
    return static_cast<double>(sum);
}

double kummer_asymptotic(double a, double b, double x) {
    if (!(b > 0.0))
        throw DomainError("asymptotic form needs b > 0, got " + std::to_string(b));
    const double power_arg = b * x / 2.0 - a * x;
    const double root_arg = 2.0 * b * x - 4.0 * a * x;
    if (!(power_arg > 0.0) || !(root_arg > 0.0))
        throw DomainError("asymptotic form needs b*x/2 - a*x > 0 and 2*b*x - 4*a*x > 0");
    const double pi = std::acos(-1.0);
    const double amplitude = std::exp(log_gamma(b)) / std::sqrt(pi) * std::exp(x / 2.0) *
                             std::pow(power_arg, (1.0 - b) / 2.0);
    return amplitude * std::cos(std::sqrt(root_arg) - b * pi / 2.0 + pi / 4.0);
}

double log_gamma(double x) {
    if (!(x > 0.0))
        throw DomainError("log_gamma needs x > 0, got " + std::to_string(x));
    // Lanczos, g = 7, n = 9; ~1e-15 relative for x >= 0.5.
    static constexpr double coeff[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (x < 0.5)
        return log_gamma(x + 1.0) - std::log(x);
    const double z = x - 1.0;
    double acc = coeff[0];
    for (int i = 1; i < 9; ++i)
        acc += coeff[i] / (z + i);
    const double t = z + 7.5;
    const double half_log_two_pi = 0.91893853320467274178;
    return half_log_two_pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

double kummer(double a, double b, double x, KummerMethod method) {
    switch (method) {
    case KummerMethod::series:
        return kummer_series(a, b, x);
    case KummerMethod::asymptotic:
        return kummer_asymptotic(a, b, x);
    case KummerMethod::polynomial: {
        const double r = std::nearbyint(a);
        if (!(r <= 0.0) || r != a || r < -2147483000.0)
            throw DomainError("polynomial method needs a = -n for integer n >= 0, got a=" +
                              std::to_string(a));
        return kummer_polynomial(static_cast<int>(-r), b, x);
    }
    case KummerMethod::automatic: {
        const double r = std::nearbyint(a);
        const double slack =
            4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a));
        if (r <= 0.0 && std::abs(a - r) <= slack && r >= -2147483000.0)
            return kummer_polynomial(static_cast<int>(-r), b, x);
        return kummer_series(a, b, x);
    }
    }
    throw DomainError("unknown kummer method");
}

double kummer(const KummerQuery& query) {
    return kummer(query.a, query.b, query.x, query.method);
}

} // namespace csdo
