#pragma once

#include "zetamax/dd.hpp"

namespace zetamax {

// Shared tolerance record for accuracy contracts.
struct Accuracy {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    bool valid() const { return abs_tol > 0.0 && rel_tol > 0.0; }
};

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
// Meissel-Mertens constant, 16 digits.
inline constexpr double kMeisselMertens = 0.2614972128476428;
// log of the Glaisher-Kinkelin constant, log A = 1/12 - zeta'(-1).
inline constexpr double kLogGlaisher = 0.24875447703378426254725299357611;
inline constexpr double kLogTwoPi = 1.8378770664093454835606594728112;
inline constexpr double kLogTwoPiE = 2.8378770664093454835606594728112;

/// log Gamma(x) for x > 0 (Stirling series with upward argument shift).
/// Relative error <= 1e-13 over the positive axis.
double log_gamma(double x);

/// Q(y) = P(Z > y) for a standard Gaussian, via erfc. Underflows to 0
/// near y ~ 39; use log_gaussian_upper_tail when the magnitude matters.
double gaussian_upper_tail(double y);

/// log Q(y), finite for all representable y (asymptotic series once the
/// erfc route would underflow).
double log_gaussian_upper_tail(double y);

/// log of the Barnes G-function for z >= 1. Satisfies the recursion
/// log G(z+1) - log G(z) = log Gamma(z) to ~1e-13.
double log_barnes_g(double z);

/// Riemann-Siegel theta, asymptotic form
///   (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3).
/// Truncation error below 1e-10 for t >= 100. Throws for t <= 0.
double riemann_siegel_theta(double t);

namespace detail {

/// theta in double-double, for phase assembly in the Z main sum where the
/// value exceeds 2^33 and plain doubles would lose the low bits.
DD riemann_siegel_theta_dd(double t);

/// Upper exponential integral E1(x) = int_x^inf e^-u/u du, x > 0
/// (modified Lentz continued fraction). Used by the prime tail estimate.
double exp_integral_e1(double x);

} // namespace detail
} // namespace zetamax
