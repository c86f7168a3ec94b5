#pragma once

#include "zetamax/primes.hpp"

namespace zetamax {

// Leading moment coefficient C_k = a_k * f_k split into its arithmetic
// (Euler product over primes) and random-matrix (Barnes G ratio) factors.
struct MomentCoefficient {
    double k = 0.0;
    double a_k = 0.0;
    double f_k = 0.0;
    double c_k = 0.0;
};

// Valid moment index range. The experiment itself only needs k up to 2
// (theta <= 3), the table of integer-k reference values needs k = 4.
inline constexpr double kMomentIndexMax = 4.5;

/// Arithmetic factor
///   a_k = prod_p (1-1/p)^{k^2} sum_m (Gamma(k+m)/(m! Gamma(k)))^2 p^-m,
/// accumulated in log space over the sieve, with the tail over p > limit
/// replaced by its second-order expansion -(k^2 (k-1)^2/4) sum_{p>limit} p^-2
/// (prime sum estimated by E1(log limit)). Throws if the bound on the error
/// left after that correction exceeds tail_tol.
double arithmetic_factor(double k, const PrimeTable& primes,
                         double tail_tol = 1e-6);

/// Random-matrix factor f_k = G(1+k)^2 / G(1+2k).
double rmt_factor(double k);

/// Assembled coefficient; deterministic given (k, primes.limit).
MomentCoefficient moment_coefficient(double k, const PrimeTable& primes);

namespace detail {
/// log of a single Euler factor of a_k (exposed for the tail-coefficient
/// expansion check).
double log_euler_factor(double k, double p);
} // namespace detail

} // namespace zetamax
