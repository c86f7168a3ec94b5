#pragma once

#include <cstdint>
#include <vector>

namespace zetamax {

// Cumulants Q_1..Q_m_max of log|P_N| for a CUE matrix of dimension n.
struct CumulantTable {
    int n = 0;
    int m_max = 0;
    std::vector<double> q; // q[m], m = 1..m_max; q[0] unused
};

struct CueDraw {
    int n = 0;
    double value = 0.0; // one realization of log|P_N(theta)|
    std::uint64_t seed_index = 0;
};

struct TailResult {
    int n = 0;
    double k = 0.0;
    double v = 0.0;             // evaluation point V = k log n / sqrt(Q2)
    double p_hat = 0.0;         // empirical exceedance probability
    double gaussian_tail = 0.0; // Q(V)
    double ratio = 0.0;         // p_hat / Q(V)
    double std_error = 0.0;     // MC standard error of the ratio
    double f_k_target = 0.0;    // G(1+k)^2/G(1+2k)
    std::uint64_t samples = 0;
};

/// Exact finite-N moment generating function
///   M_N(s) = prod_{j=1}^N Gamma(j) Gamma(j+s) / Gamma(j+s/2)^2,
/// computed in log space. Requires s > -1.
double mgf(int n, double s);

/// Q_1 = 0; Q_2 by the four-term expansion; Q_m (m >= 3) by
///   (-1)^m (2^{m-1}-1)/2^{m-1} (Gamma(m) zeta(m-1) - (m-3)!/N^{m-2}).
/// Requires n >= 2 and 3 <= m_max <= 12.
CumulantTable cumulants(int n, int m_max);

/// Taylor coefficients A_m of exp(sum_{m>=3} Q_m s^m / m!) via the power
/// series exponentiation recurrence. Returns a vector indexed by m
/// (entries below m = 3 are zero), size m_max + 1.
std::vector<double> a_coefficients(const CumulantTable& table);

/// Truncated Edgeworth-type density of the rescaled log|P_N|:
///   phi(x) (1 + sum_{m=3}^{m_max} A_m/Q2^{m/2}
///                 sum_{p=0}^m binom(m,p) x^p E(m,p)).
double density_expansion(double x, const CumulantTable& table);

/// One draw of log|P_N(theta)| via the product decomposition: independent
/// factors |1 - gamma_j|, phase uniform, radius^2 ~ Beta(1, j-1) (r_1 = 1).
/// Individual log terms are clamped at -50. O(N) per draw, deterministic
/// in (seed, seed_index).
CueDraw sample_log_abs_poly(int n, std::uint64_t seed, std::uint64_t seed_index);

/// Monte Carlo estimate of P(log|P_N| > k log N) / Q(V) at the moderate
/// deviation point V = k log N / sqrt(Q2(N)). Throws if fewer than 100
/// exceedances were observed. workers = 0 means hardware concurrency.
TailResult tail_experiment(int n, double k, std::uint64_t samples,
                           std::uint64_t seed, int workers = 0);

namespace detail {

/// E(m,p): 0 for m-p odd, (-1)^{(m-p)/2} (m-p-1)!! for m-p even
/// (the real value of i^{m-p}(m-p-1)!!).
double parity_sum(int m, int p);

/// zeta(s) for integer s in [2, 11]: direct sum to 1e6 terms plus
/// Euler-Maclaurin tail.
double zeta_int(int s);

} // namespace detail
} // namespace zetamax
