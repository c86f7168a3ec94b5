#include "zetamax/special.hpp"

#include <cmath>
#include <stdexcept>

namespace zetamax {

namespace {

// B_{2k}/(2k(2k-1)) for the Stirling series, k = 1..8.
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

// Stirling series for log Gamma, valid once x >= 16.
double log_gamma_stirling(double x) {
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double series = 0.0;
    double p = inv;
    for (double c : kStirling) {
        series += c * p;
        p *= inv2;
    }
    return (x - 0.5) * std::log(x) - x + 0.5 * kLogTwoPi + series;
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0))
        throw std::domain_error("log_gamma: argument must be positive");
    double shift = 0.0;
    while (x < 16.0) {
        shift += std::log(x);
        x += 1.0;
    }
    return log_gamma_stirling(x) - shift;
}

double gaussian_upper_tail(double y) {
    return 0.5 * std::erfc(y * 0.70710678118654752440);
}

double log_gaussian_upper_tail(double y) {
    if (y < 30.0) {
        double q = gaussian_upper_tail(y);
        if (y <= -30.0)
            return std::log1p(-gaussian_upper_tail(-y)); // q indistinguishable from 1
        return std::log(q);
    }
    // Q(y) = phi(y)/y * (1 - 1/y^2 + 3/y^4 - 15/y^6 + ...), asymptotic,
    // truncated where the terms bottom out (~1e-18 at y = 30).
    double y2 = y * y;
    double term = 1.0;
    double series = 1.0;
    double dfact = 1.0;
    for (int m = 1; m <= 9; ++m) {
        dfact *= 2 * m - 1;
        term /= -y2;
        series += dfact * term;
    }
    return -0.5 * y2 - std::log(y) - 0.5 * kLogTwoPi + std::log(series);
}

double log_barnes_g(double z) {
    if (!(z >= 1.0))
        throw std::domain_error("log_barnes_g: argument must be >= 1");
    // Downward recursion G(z) = G(z+1)/Gamma(z) until the asymptotic
    // expansion at w = z-1 >= 20 is accurate to ~1e-19.
    double acc = 0.0;
    while (z < 21.0) {
        acc += log_gamma(z);
        z += 1.0;
    }
    double w = z - 1.0;
    // log G(w+1) = w^2/4 + w logGamma(w+1) - (w(w+1)/2 + 1/12) log w
    //              - log A + sum_k B_{2k+2}/(2k(2k+1)(2k+2) w^{2k})
    constexpr double kAsym[] = {
        -1.0 / 720.0,     // B4/(2*3*4)
        1.0 / 5040.0,     // B6/(4*5*6)
        -1.0 / 10080.0,   // B8/(6*7*8)
        1.0 / 9504.0,     // B10/(8*9*10)
        -691.0 / 3603600.0, // B12/(10*11*12)
    };
    double w2 = w * w;
    double series = 0.0;
    double p = 1.0 / w2;
    for (double c : kAsym) {
        series += c * p;
        p /= w2;
    }
    double lng = 0.25 * w2 + w * log_gamma(w + 1.0) -
                 (0.5 * w * (w + 1.0) + 1.0 / 12.0) * std::log(w) -
                 kLogGlaisher + series;
    return lng - acc;
}

double riemann_siegel_theta(double t) {
    if (!(t > 0.0))
        throw std::domain_error("riemann_siegel_theta: argument must be positive");
    DD th = detail::riemann_siegel_theta_dd(t);
    return th.hi + th.lo;
}

namespace detail {

DD riemann_siegel_theta_dd(double t) {
    // (t/2) log(t/2pi) in double-double; the remaining terms are O(t) or
    // smaller and fine in plain double relative to the dd budget.
    long double tl = static_cast<long double>(t);
    long double arg = tl / (2.0L * 3.14159265358979323846264338327950288L);
    long double ll = std::log(arg);
    DD L{static_cast<double>(ll), static_cast<double>(ll - static_cast<long double>(static_cast<double>(ll)))};
    DD lead = dd::mul(L, 0.5 * t);
    DD out = dd::add(lead, -0.5 * t);
    double pi_over_8 = 0.39269908169872415480783042290994;
    double small = -pi_over_8 + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t * t * t);
    return dd::add(out, small);
}

double exp_integral_e1(double x) {
    if (!(x > 0.0))
        throw std::domain_error("exp_integral_e1: argument must be positive");
    // Modified Lentz on the continued fraction
    //   E1(x) = e^-x / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = a * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return std::exp(-x) * h;
}

} // namespace detail
} // namespace zetamax
