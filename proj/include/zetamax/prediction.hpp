#pragma once

#include "zetamax/primes.hpp"

#include <cstdint>
#include <functional>

namespace zetamax {

struct PredictionInput {
    double t = 0.0;               // height T >= 1e4
    double theta = 0.0;           // interval exponent in [0, 3]
    bool use_correction = true;   // C = C_sqrt(1+theta) vs C = 1
    std::uint64_t prime_limit = 1'000'000;
};

// All derived quantities for one (T, theta) pair.
struct Prediction {
    double t = 0.0;
    double theta = 0.0;
    double n_points = 0.0;     // N_{theta,T}
    double sigma = 0.0;        // Mertens-corrected sigma_T
    double c_used = 1.0;
    double y_star = 0.0;
    double shift = 0.0;        // sigma * Y*
    double beta = 0.0;         // finite-size Gumbel scale sigma^2/(sigma Y*)
    double m_const = 0.0;      // B/4
    double fluct_mean = 0.0;
    double fluct_std = 0.0;    // beta * pi / sqrt(6)
    double predicted_mean = 0.0;
    double predicted_std = 0.0;
    bool theta_zero_caveat = false; // model not expected to hold at theta = 0
};

/// N_{theta,T} = (log T)^theta * log(T / 2 pi e)   (finite-size form).
double zero_count(double t, double theta);

/// sigma_T = sqrt(log log T / 2) + B / (2 sqrt(2 log log T)).
double sigma_t(double t);

/// Solve N C Q(Y*) = 1 in log space by safeguarded Newton on [0, 50].
/// Requires n_points * c > 2 (throws otherwise) and tol <= 1e-12.
double solve_y_star(double n_points, double c, double tol = 1e-13);

/// Model CDF of the recentered maximum: P(max - sigma Y* <= y) = exp(-G(y)),
/// G(y) = Q(Y* + y/sigma) / Q(Y*). Monotone nondecreasing, -> 1 as y -> inf.
double fluctuation_cdf(double y, double y_star, double sigma);

/// Survival 1 - exp(-G(y)); equals 1 - 1/e at y = 0 by construction.
double fluctuation_survival(double y, double y_star, double sigma);

/// Mean of the G-law fluctuation, by adaptive quadrature of the CDF
/// (1e-8 absolute).
double fluctuation_mean(double y_star, double sigma);

Prediction predict(const PredictionInput& input, const PrimeTable& primes);
Prediction predict(const PredictionInput& input);

namespace detail {

/// Mean of the law with CDF exp(-G(y)) on [lower, inf), G = exp(log_g(y)).
/// Shared by fluctuation_mean and the pure-Gumbel quadrature check.
double mean_from_log_g(const std::function<double(double)>& log_g,
                       double lower, double abs_tol = 1e-9);

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol);

} // namespace detail
} // namespace zetamax
