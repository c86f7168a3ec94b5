#include "zetamax/cue.hpp"

#include "zetamax/rng.hpp"
#include "zetamax/special.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace zetamax {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 6.28318530717958647692528676655900577;

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace

namespace detail {

double parity_sum(int m, int p) {
    int d = m - p;
    if (d % 2 != 0) return 0.0;
    int half = d / 2;
    double dfact = 1.0; // (m-p-1)!!, with (-1)!! = 1
    for (int j = d - 1; j >= 2; j -= 2) dfact *= j;
    return (half % 2 == 0) ? dfact : -dfact;
}

double zeta_int(int s) {
    if (s < 2 || s > 11)
        throw std::domain_error("zeta_int: s must be in [2, 11]");
    static const std::array<double, 12> cache = [] {
        std::array<double, 12> z{};
        constexpr int kTerms = 1'000'000;
        // downward summation keeps the forward-accumulation error out
        for (int n = kTerms; n >= 1; --n) {
            double inv = 1.0 / n;
            double p = inv * inv;
            for (int e = 2; e <= 11; ++e) {
                z[e] += p;
                p *= inv;
            }
        }
        double M = kTerms + 1.0;
        for (int e = 2; e <= 11; ++e) {
            double tail = std::pow(M, 1.0 - e) / (e - 1.0) + 0.5 * std::pow(M, -e);
            tail += e / 12.0 * std::pow(M, -e - 1.0);
            tail -= e * (e + 1.0) * (e + 2.0) / 720.0 * std::pow(M, -e - 3.0);
            z[e] += tail;
        }
        return z;
    }();
    return cache[s];
}

} // namespace detail

double mgf(int n, double s) {
    if (n < 1) throw std::domain_error("mgf: n must be >= 1");
    if (!(s > -1.0)) throw std::domain_error("mgf: s must exceed -1");
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) {
        double dj = static_cast<double>(j);
        acc += log_gamma(dj) + log_gamma(dj + s) - 2.0 * log_gamma(dj + 0.5 * s);
    }
    return std::exp(acc);
}

CumulantTable cumulants(int n, int m_max) {
    if (n < 2) throw std::domain_error("cumulants: n must be >= 2");
    if (m_max < 3 || m_max > 12)
        throw std::domain_error("cumulants: m_max must be in [3, 12]");
    CumulantTable t;
    t.n = n;
    t.m_max = m_max;
    t.q.assign(m_max + 1, 0.0);
    double dn = static_cast<double>(n);
    double n2 = dn * dn;
    t.q[1] = 0.0;
    t.q[2] = 0.5 * std::log(dn) + 0.5 * (kEulerGamma + 1.0) + 1.0 / (24.0 * n2) -
             1.0 / (80.0 * n2 * n2);
    for (int m = 3; m <= m_max; ++m) {
        double pref = (1.0 - std::pow(2.0, 1.0 - m)); // (2^{m-1}-1)/2^{m-1}
        double sign = (m % 2 == 0) ? 1.0 : -1.0;
        double gamma_m = std::exp(log_gamma(static_cast<double>(m)));
        double fact_m3 = std::exp(log_gamma(static_cast<double>(m - 2)));
        t.q[m] = sign * pref *
                 (gamma_m * detail::zeta_int(m - 1) -
                  fact_m3 / std::pow(dn, m - 2));
    }
    return t;
}

std::vector<double> a_coefficients(const CumulantTable& table) {
    // exp of a power series: a_j = (1/j) sum_i i b_i a_{j-i}, b_i = Q_i/i!.
    int mm = table.m_max;
    std::vector<double> b(mm + 1, 0.0);
    double fact = 2.0;
    for (int m = 3; m <= mm; ++m) {
        fact *= m;
        b[m] = table.q[m] / fact;
    }
    std::vector<double> a(mm + 1, 0.0);
    a[0] = 1.0;
    for (int j = 3; j <= mm; ++j) {
        double acc = 0.0;
        for (int i = 3; i <= j; ++i)
            acc += i * b[i] * a[j - i];
        a[j] = acc / j;
    }
    a[0] = 0.0; // report only the correction coefficients A_3..A_m_max
    return a;
}

double density_expansion(double x, const CumulantTable& table) {
    std::vector<double> a = a_coefficients(table);
    double q2 = table.q[2];
    double corr = 0.0;
    for (int m = 3; m <= table.m_max; ++m) {
        if (a[m] == 0.0) continue;
        double inner = 0.0;
        double binom = 1.0;
        double xp = 1.0;
        for (int p = 0; p <= m; ++p) {
            inner += binom * xp * detail::parity_sum(m, p);
            binom = binom * (m - p) / (p + 1.0);
            xp *= x;
        }
        corr += a[m] / std::pow(q2, 0.5 * m) * inner;
    }
    double phi = std::exp(-0.5 * x * x) / std::sqrt(kTwoPi);
    return phi * (1.0 + corr);
}

CueDraw sample_log_abs_poly(int n, std::uint64_t seed, std::uint64_t seed_index) {
    if (n < 1) throw std::domain_error("sample_log_abs_poly: n must be >= 1");
    double x = 0.0;
    for (int j = 1; j <= n; ++j) {
        auto block = Philox4x64::block(
            make_counter(seed_index, static_cast<std::uint64_t>(j),
                         RngStream::kCueDraw),
            {seed, 0});
        double phi = kTwoPi * u64_to_unit(block[0]);
        double one_minus_r2; // 1 - r^2 = u^{1/(j-1)} for Beta(1, j-1) radii
        if (j == 1) {
            one_minus_r2 = 0.0;
        } else {
            double u = u64_to_unit(block[1]);
            one_minus_r2 = (u > 0.0)
                               ? std::exp(std::log(u) / (j - 1.0))
                               : 0.0;
        }
        double r = std::sqrt(1.0 - one_minus_r2);
        double one_minus_r = (1.0 - one_minus_r2 <= 0.0)
                                 ? 1.0
                                 : one_minus_r2 / (1.0 + r);
        // |1 - r e^{i phi}|^2 = (1-r)^2 + 4 r sin^2(phi/2)
        double s = std::sin(0.5 * phi);
        double mag2 = one_minus_r * one_minus_r + 4.0 * r * s * s;
        double term = 0.5 * std::log(mag2);
        x += std::max(term, -50.0);
    }
    return {n, x, seed_index};
}

TailResult tail_experiment(int n, double k, std::uint64_t samples,
                           std::uint64_t seed, int workers) {
    if (n < 2) throw std::domain_error("tail_experiment: n must be >= 2");
    if (!(k > 0.0) || k > 1.5)
        throw std::domain_error("tail_experiment: k must be in (0, 1.5]");
    if (samples < 100'000)
        throw std::domain_error("tail_experiment: need at least 1e5 samples");

    double threshold = k * std::log(static_cast<double>(n));
    double q2 = cumulants(n, 3).q[2];
    double v = threshold / std::sqrt(q2);

    int nw = resolve_workers(workers);
    std::vector<std::uint64_t> counts(nw, 0);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (samples + nw - 1) / nw;
    for (int w = 0; w < nw; ++w) {
        pool.emplace_back([&, w] {
            std::uint64_t begin = w * chunk;
            std::uint64_t end = std::min<std::uint64_t>(begin + chunk, samples);
            std::uint64_t local = 0;
            for (std::uint64_t i = begin; i < end; ++i)
                if (sample_log_abs_poly(n, seed, i).value > threshold) ++local;
            counts[w] = local;
        });
    }
    for (auto& th : pool) th.join();
    std::uint64_t exceed = 0;
    for (auto c : counts) exceed += c;
    if (exceed < 100)
        throw std::runtime_error(
            "tail_experiment: fewer than 100 exceedances; k too large for n/samples");

    TailResult r;
    r.n = n;
    r.k = k;
    r.v = v;
    r.samples = samples;
    r.p_hat = static_cast<double>(exceed) / static_cast<double>(samples);
    r.gaussian_tail = gaussian_upper_tail(v);
    r.ratio = r.p_hat / r.gaussian_tail;
    r.std_error = std::sqrt(r.p_hat * (1.0 - r.p_hat) /
                            static_cast<double>(samples)) /
                  r.gaussian_tail;
    r.f_k_target =
        std::exp(2.0 * log_barnes_g(1.0 + k) - log_barnes_g(1.0 + 2.0 * k));
    return r;
}

} // namespace zetamax
