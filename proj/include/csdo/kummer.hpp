#pragma once

#include "csdo/errors.hpp"

/// Confluent hypergeometric function 1F1(a, b; x) for x >= 0, evaluated by
/// power series, by exact polynomial termination (a = -n), and by a cosine
/// large-|a| approximation, plus the log-gamma support function.
namespace csdo {

enum class KummerMethod { automatic, series, polynomial, asymptotic };

struct KummerQuery {
    double a;
    double b;
    double x;
    KummerMethod method = KummerMethod::automatic;
};

/// Power series sum_k (a)_k x^k / ((b)_k k!) with term recurrence
/// t_{k+1} = t_k (a+k) x / ((b+k)(k+1)). Stops once |t_k / partial_sum|
/// < 1e-16 holds for three consecutive terms; capped at 1e6 terms.
/// The term and partial sum accumulate in long double: alternating series
/// with large |a| cancel heavily (the largest term reaches ~e^{2 sqrt(|a| x)}
/// times the result) and 80-bit accumulation keeps the quantization scans
/// accurate.
/// Throws PoleAtB when b is zero or a negative integer, DomainError when
/// x < 0, NoConvergence at the term cap or when the partial sums overflow.
double kummer_series(double a, double b, double x);

/// Exact finite sum for a = -n: a polynomial of degree n in x.
/// Same b and x restrictions as the series.
double kummer_polynomial(int n, double b, double x);

/// Cosine approximation for large negative a:
///   Gamma(b)/sqrt(pi) * e^{x/2} * (b x/2 - a x)^{(1-b)/2}
///     * cos(sqrt(2 b x - 4 a x) - b pi/2 + pi/4).
/// The phase term converges to the true oscillation as a -> -inf; the
/// amplitude factor is kept exactly in this form, so the pointwise value
/// error does not vanish (measured in the tests).
/// Throws DomainError unless b > 0, b*x/2 - a*x > 0 and 2*b*x - 4*a*x > 0.
double kummer_asymptotic(double a, double b, double x);

/// Natural log of Gamma(x) for x > 0, accurate to 1e-12 relative
/// (Lanczos approximation, g = 7, 9 coefficients).
/// Throws DomainError for x <= 0.
double log_gamma(double x);

/// Dispatch. automatic uses the polynomial when a is a nonpositive integer
/// (within 4 ulp) and the series otherwise; asymptotic only when requested.
double kummer(double a, double b, double x, KummerMethod method = KummerMethod::automatic);
double kummer(const KummerQuery& query);

} // namespace csdo
