#include "zetamax/prediction.hpp"

#include "zetamax/moments.hpp"
#include "zetamax/special.hpp"

#include <cmath>
#include <stdexcept>

namespace zetamax {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void check_input(double t, double theta) {
    if (!(t >= 1e4))
        throw std::domain_error("prediction: T must be >= 1e4");
    if (!(theta >= 0.0) || theta > 3.0)
        throw std::domain_error("prediction: theta must be in [0, 3]");
}

} // namespace

double zero_count(double t, double theta) {
    check_input(t, theta);
    double logt = std::log(t);
    return std::pow(logt, theta) * (logt - kLogTwoPiE);
}

double sigma_t(double t) {
    if (!(t >= 1e4))
        throw std::domain_error("sigma_t: T must be >= 1e4");
    double ll = std::log(std::log(t));
    return std::sqrt(0.5 * ll) + kMeisselMertens / (2.0 * std::sqrt(2.0 * ll));
}

double solve_y_star(double n_points, double c, double tol) {
    if (!(tol > 0.0) || tol > 1e-12)
        throw std::domain_error("solve_y_star: tol must be in (0, 1e-12]");
    double log_nc = std::log(n_points) + std::log(c);
    if (!(n_points * c > 2.0))
        throw std::runtime_error(
            "solve_y_star: no root, N*C <= 2 (theta/T outside the model regime)");

    // h(y) = log(N C) + log Q(y); h(0) > 0, h decreasing.
    auto h = [&](double y) { return log_nc + log_gaussian_upper_tail(y); };
    double lo = 0.0, hi = 50.0;
    double y = std::sqrt(2.0 * log_nc); // leading-order start
    if (!(y > lo && y < hi)) y = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        double hy = h(y);
        if (std::fabs(hy) <= 0.5 * tol) break;
        if (hy > 0.0) lo = y; else hi = y;
        // h'(y) = -phi(y)/Q(y)
        double dq = -std::exp(-0.5 * y * y - 0.5 * kLogTwoPi -
                              log_gaussian_upper_tail(y));
        double next = y - hy / dq;
        y = (next > lo && next < hi) ? next : 0.5 * (lo + hi);
    }
    return y;
}

double fluctuation_cdf(double y, double y_star, double sigma) {
    if (!(y_star > 0.0) || !(sigma > 0.0))
        throw std::domain_error("fluctuation_cdf: y_star and sigma must be positive");
    double log_g = log_gaussian_upper_tail(y_star + y / sigma) -
                   log_gaussian_upper_tail(y_star);
    return std::exp(-std::exp(log_g));
}

double fluctuation_survival(double y, double y_star, double sigma) {
    if (!(y_star > 0.0) || !(sigma > 0.0))
        throw std::domain_error("fluctuation_survival: y_star and sigma must be positive");
    double log_g = log_gaussian_upper_tail(y_star + y / sigma) -
                   log_gaussian_upper_tail(y_star);
    return -std::expm1(-std::exp(log_g));
}

namespace detail {

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a,
                     double fa, double b, double fb, double m, double fm,
                     double whole, double tol, int depth) {
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(a, fa, m, fm, flm);
    double right = simpson(m, fm, b, fb, frm);
    double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    if (depth <= 0)
        throw std::runtime_error("adaptive_simpson: quadrature did not converge");
    return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
    double whole = simpson(a, fa, b, fb, fm);
    return adaptive_step(f, a, fa, b, fb, m, fm, whole, tol, 48);
}

double mean_from_log_g(const std::function<double(double)>& log_g,
                       double lower, double abs_tol) {
    // E[Y] = int_0^inf (1 - F) dy - int_lower^0 F dy with F = exp(-G).
    auto upper_integrand = [&](double y) {
        return -std::expm1(-std::exp(log_g(y)));
    };
    auto lower_integrand = [&](double y) {
        return std::exp(-std::exp(log_g(y)));
    };
    // G decays monotonically; past log G < -36 the survival is < 3e-16.
    double y_hi = 1.0;
    while (log_g(y_hi) > -36.0 && y_hi < 1e6) y_hi *= 1.5;
    double pos = adaptive_simpson(upper_integrand, 0.0, y_hi, abs_tol * 0.5);
    double neg = adaptive_simpson(lower_integrand, lower, 0.0, abs_tol * 0.5);
    return pos - neg;
}

} // namespace detail

double fluctuation_mean(double y_star, double sigma) {
    if (!(y_star > 0.0) || !(sigma > 0.0))
        throw std::domain_error("fluctuation_mean: y_star and sigma must be positive");
    double log_q_star = log_gaussian_upper_tail(y_star);
    auto log_g = [=](double y) {
        return log_gaussian_upper_tail(y_star + y / sigma) - log_q_star;
    };
    return detail::mean_from_log_g(log_g, -sigma * y_star, 1e-9);
}

Prediction predict(const PredictionInput& input, const PrimeTable& primes) {
    check_input(input.t, input.theta);
    Prediction out;
    out.t = input.t;
    out.theta = input.theta;
    out.theta_zero_caveat = (input.theta == 0.0);
    out.n_points = zero_count(input.t, input.theta);
    out.sigma = sigma_t(input.t);
    out.c_used = 1.0;
    if (input.use_correction) {
        double k = std::sqrt(1.0 + input.theta);
        out.c_used = moment_coefficient(k, primes).c_k;
    }
    out.y_star = solve_y_star(out.n_points, out.c_used);
    double residual = std::expm1(std::log(out.n_points) + std::log(out.c_used) +
                                 log_gaussian_upper_tail(out.y_star));
    if (std::fabs(residual) > 1e-12)
        throw std::runtime_error("predict: Y* solver residual above 1e-12");
    out.shift = out.sigma * out.y_star;
    out.beta = out.sigma / out.y_star; // sigma^2 / (sigma Y*)
    out.m_const = kMeisselMertens / 4.0;
    out.fluct_mean = fluctuation_mean(out.y_star, out.sigma);
    out.fluct_std = out.beta * kPi / std::sqrt(6.0);
    out.predicted_mean = out.shift + out.fluct_mean;
    out.predicted_std = out.fluct_std;
    return out;
}

Prediction predict(const PredictionInput& input) {
    PrimeTable primes;
    if (input.use_correction)
        primes = sieve_primes(input.prime_limit);
    return predict(input, primes);
}

} // namespace zetamax
