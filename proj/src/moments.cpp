#include "zetamax/moments.hpp"

#include "zetamax/special.hpp"

#include <cmath>
#include <stdexcept>

namespace zetamax {

namespace detail {

double log_euler_factor(double k, double p) {
    // Inner series by the term recursion term_{m+1} = term_m ((k+m)/(m+1))^2/p,
    // stopped once the next term is below 1e-17 of the partial sum.
    double term = 1.0;
    double sum = 1.0;
    for (int m = 0;; ++m) {
        double r = (k + m) / (m + 1.0);
        term *= r * r / p;
        sum += term;
        if (term < 1e-17 * sum) break;
        if (m > 10000)
            throw std::runtime_error("log_euler_factor: series did not converge");
    }
    return k * k * std::log1p(-1.0 / p) + std::log(sum);
}

namespace {

void check_k(double k) {
    if (!(k > 0.0) || k > kMomentIndexMax)
        throw std::domain_error("moment index k out of range (0, 4.5]");
}

// x^3 coefficient of log(euler factor) expanded in x = 1/p; zero at k = 1, 2.
double third_order_coeff(double k) {
    double c1 = k * k;
    double c2 = k * (k + 1) / 2.0;
    c2 *= c2;
    double c3 = k * (k + 1) * (k + 2) / 6.0;
    c3 *= c3;
    return c3 - c1 * c2 + c1 * c1 * c1 / 3.0 - k * k / 3.0;
}

} // namespace
} // namespace detail

double arithmetic_factor(double k, const PrimeTable& primes, double tail_tol) {
    detail::check_k(k);
    if (!(tail_tol > 0.0) || tail_tol > 1e-6)
        throw std::domain_error("arithmetic_factor: tail_tol must be in (0, 1e-6]");

    double log_a = 0.0;
    for (std::uint32_t p : primes.primes)
        log_a += detail::log_euler_factor(k, static_cast<double>(p));

    // Tail over p > limit: each factor contributes -k^2(k-1)^2/(4p^2) + O(p^-3),
    // and sum_{p>L} p^-2 ~ int_L^inf dx/(x^2 log x) = E1(log L).
    double L = static_cast<double>(primes.limit);
    double logL = std::log(L);
    double coeff2 = -k * k * (k - 1.0) * (k - 1.0) / 4.0;
    double tail = coeff2 * detail::exp_integral_e1(logL);

    // Error budget left after applying the correction: the prime-count
    // fluctuation around li(x) (RH-strength bound) times |coeff2|, plus the
    // neglected p^-3 order.
    double fluct = (7.0 / 3.0) * logL / (8.0 * 3.14159265358979323846 * L * std::sqrt(L));
    double p3_tail = 1.0 / (2.0 * L * L * logL);
    double residual = std::fabs(coeff2) * fluct +
                      std::fabs(detail::third_order_coeff(k)) * p3_tail;
    if (residual > tail_tol)
        throw std::runtime_error(
            "arithmetic_factor: estimated truncation error exceeds tail_tol; "
            "increase the prime limit");

    return std::exp(log_a + tail);
}

double rmt_factor(double k) {
    detail::check_k(k);
    return std::exp(2.0 * log_barnes_g(1.0 + k) - log_barnes_g(1.0 + 2.0 * k));
}

MomentCoefficient moment_coefficient(double k, const PrimeTable& primes) {
    MomentCoefficient mc;
    mc.k = k;
    mc.a_k = arithmetic_factor(k, primes);
    mc.f_k = rmt_factor(k);
    mc.c_k = mc.a_k * mc.f_k;
    return mc;
}

} // namespace zetamax
