#include "zetamax/zeta.hpp"

#include "zetamax/dd.hpp"
#include "zetamax/prediction.hpp"
#include "zetamax/rng.hpp"
#include "zetamax/special.hpp"

#include "json.hpp"
#include "rs_remainder_tables.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace zetamax {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 6.28318530717958647692528676655900577;
constexpr double kMinHeight = 1e5;    // below this the evaluator is not certified
constexpr double kDdCutoff = 1e8;     // compensated phase reduction above this

template <std::size_t N>
double cheb(const double (&c)[N], double x) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t i = N - 1; i >= 1; --i) {
        double t = 2.0 * x * b1 - b2 + c[i];
        b2 = b1;
        b1 = t;
    }
    return x * b1 - b2 + 0.5 * c[0];
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

} // namespace

GridSpec GridSpec::make(double tau, double t_scale, double theta) {
    if (!(t_scale > 0.0) || !(theta >= 0.0) || theta > 3.0)
        throw std::domain_error("GridSpec: need T > 0 and theta in [0, 3]");
    GridSpec g;
    g.t_center = tau;
    g.half_width = kPi * std::pow(std::log(t_scale), theta);
    g.spacing = kTwoPi / std::log(t_scale / kTwoPi);
    g.n_points =
        static_cast<std::int64_t>(std::floor(2.0 * g.half_width / g.spacing)) + 1;
    return g;
}

double GridSpec::offset(std::int64_t i) const {
    return (static_cast<double>(i) - 0.5 * static_cast<double>(n_points - 1)) *
           spacing;
}

RsEvaluator::RsEvaluator(double t_max) : t_max_(t_max) {
    if (!(t_max > kMinHeight))
        throw std::domain_error("RsEvaluator: t_max must exceed 1e5");
    auto m_cap = static_cast<std::size_t>(std::sqrt(t_max / kTwoPi)) + 2;
    rsqrt_.resize(m_cap + 1);
    log_hi_.resize(m_cap + 1);
    log_lo_.resize(m_cap + 1);
    for (std::size_t n = 1; n <= m_cap; ++n) {
        rsqrt_[n] = 1.0 / std::sqrt(static_cast<double>(n));
        DD l = dd::log_dd(static_cast<double>(n));
        log_hi_[n] = l.hi;
        log_lo_[n] = l.lo;
    }
}

double RsEvaluator::z(double t) const {
    if (!(t >= kMinHeight))
        throw std::domain_error("riemann_siegel_Z: t below 1e5 (use an "
                                "Euler-Maclaurin evaluation there)");
    if (t > t_max_)
        throw std::domain_error("riemann_siegel_Z: t above evaluator capacity");

    double a = std::sqrt(t / kTwoPi);
    auto m = static_cast<std::int64_t>(a);
    double p = a - static_cast<double>(m);

    DD th = detail::riemann_siegel_theta_dd(t);
    double sum = 0.0;
    if (t >= kDdCutoff) {
        for (std::int64_t n = 1; n <= m; ++n) {
            DD tln = dd::mul(DD{log_hi_[n], log_lo_[n]}, t);
            double arg = dd::mod_two_pi(dd::sub(th, tln));
            sum += rsqrt_[n] * std::cos(arg);
        }
    } else {
        double thd = th.hi + th.lo;
        for (std::int64_t n = 1; n <= m; ++n)
            sum += rsqrt_[n] * std::cos(thd - t * log_hi_[n]);
    }

    double x = 2.0 * p - 1.0;
    double inv_a = 1.0 / a;
    double corr = cheb(rs_tables::kC0, x) +
                  inv_a * (cheb(rs_tables::kC1, x) +
                           inv_a * (cheb(rs_tables::kC2, x) +
                                    inv_a * cheb(rs_tables::kC3, x)));
    double sign = (m % 2 == 1) ? 1.0 : -1.0; // (-1)^(m-1)
    return 2.0 * sum + sign * corr / std::sqrt(a);
}

double RsEvaluator::log_abs_z(double t) const {
    double zv = std::fabs(z(t));
    if (zv <= 0.0) return -50.0;
    return std::max(std::log(zv), -50.0);
}

namespace {

RsEvaluator& thread_local_evaluator(double t_need) {
    static thread_local std::unique_ptr<RsEvaluator> ev;
    if (!ev || t_need > ev->t_max())
        ev = std::make_unique<RsEvaluator>(std::max(2.0 * kMinHeight, 1.25 * t_need));
    return *ev;
}

} // namespace

double riemann_siegel_Z(double t) { return thread_local_evaluator(t).z(t); }

ZetaSample interval_max(const RsEvaluator& ev, double tau, double t_scale,
                        double theta, std::uint64_t seed_index) {
    GridSpec g = GridSpec::make(tau, t_scale, theta);
    if (tau - g.half_width < kMinHeight)
        throw std::domain_error("interval_max: grid extends below t = 1e5");
    ZetaSample s;
    s.tau = tau;
    s.theta = theta;
    s.n_points = g.n_points;
    s.seed_index = seed_index;
    double best = -1e300;
    double best_off = 0.0;
    for (std::int64_t i = 0; i < g.n_points; ++i) {
        double off = g.offset(i);
        double v = ev.log_abs_z(tau + off);
        if (v > best) {
            best = v;
            best_off = off;
        }
    }
    s.max_log_abs = best;
    s.argmax_offset = best_off;
    return s;
}

ZetaSample interval_max(double tau, double t_scale, double theta) {
    GridSpec g = GridSpec::make(tau, t_scale, theta);
    return interval_max(thread_local_evaluator(tau + g.half_width), tau, t_scale,
                        theta);
}

double sample_tau(double t_scale, std::uint64_t seed, std::uint64_t index) {
    auto block =
        Philox4x64::block(make_counter(index, 0, RngStream::kZetaTau), {seed, 0});
    return t_scale * (1.0 + u64_to_unit(block[0]));
}

namespace {

using nlohmann::json;

struct CheckpointStore {
    // done[theta_idx][i]
    std::vector<std::vector<char>> done;
    std::vector<std::vector<ZetaSample>> samples;
};

std::size_t theta_index(const std::vector<double>& thetas, double theta) {
    for (std::size_t k = 0; k < thetas.size(); ++k)
        if (thetas[k] == theta) return k;
    return thetas.size();
}

CheckpointStore load_checkpoint(const ExperimentConfig& cfg) {
    CheckpointStore st;
    st.done.assign(cfg.thetas.size(),
                   std::vector<char>(cfg.sample_size, 0));
    st.samples.assign(cfg.thetas.size(),
                      std::vector<ZetaSample>(cfg.sample_size));
    if (cfg.checkpoint_path.empty()) return st;
    std::ifstream in(cfg.checkpoint_path, std::ios::binary);
    if (!in) return st; // no checkpoint yet
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t nl = content.find('\n', pos);
        bool torn = (nl == std::string::npos);
        std::string line =
            content.substr(pos, torn ? std::string::npos : nl - pos);
        pos = torn ? content.size() : nl + 1;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        bool ok = !j.is_discarded() && j.contains("i") && j.contains("theta") &&
                  j.contains("tau") && j.contains("max") &&
                  j.contains("argmax") && j.contains("n_points");
        if (!ok) {
            if (torn) break; // interrupted mid-write; drop the fragment
            throw std::runtime_error("checkpoint corrupt: unparseable line");
        }
        auto i = j["i"].get<std::uint64_t>();
        auto th = j["theta"].get<double>();
        std::size_t k = theta_index(cfg.thetas, th);
        if (k == cfg.thetas.size() || i >= cfg.sample_size)
            continue; // belongs to a wider run; harmless
        ZetaSample s;
        s.tau = j["tau"].get<double>();
        s.theta = th;
        s.max_log_abs = j["max"].get<double>();
        s.argmax_offset = j["argmax"].get<double>();
        s.n_points = j["n_points"].get<std::int64_t>();
        s.seed_index = i;
        st.samples[k][i] = s;
        st.done[k][i] = 1;
    }
    return st;
}

std::string checkpoint_line(std::uint64_t i, const ZetaSample& s) {
    nlohmann::ordered_json j;
    j["i"] = i;
    j["theta"] = s.theta;
    j["tau"] = s.tau;
    j["max"] = s.max_log_abs;
    j["argmax"] = s.argmax_offset;
    j["n_points"] = s.n_points;
    return j.dump();
}

} // namespace

ExperimentSamples run_experiment_samples(const ExperimentConfig& cfg) {
    if (cfg.sample_size < 10)
        throw std::domain_error("run_experiment: sample_size must be >= 10");
    if (cfg.thetas.empty())
        throw std::domain_error("run_experiment: no theta values given");
    double max_hw = 0.0;
    for (double th : cfg.thetas) {
        GridSpec g = GridSpec::make(cfg.t, cfg.t, th);
        max_hw = std::max(max_hw, g.half_width);
    }
    if (cfg.t - max_hw < kMinHeight)
        throw std::domain_error("run_experiment: T too small for the widest grid");

    CheckpointStore st = load_checkpoint(cfg);

    // Work queue of (sample, theta) pairs still missing. Widest grids first
    // so the tail of the run stays balanced across workers.
    std::vector<std::pair<std::uint64_t, std::size_t>> work;
    for (std::size_t k = cfg.thetas.size(); k-- > 0;)
        for (std::uint64_t i = 0; i < cfg.sample_size; ++i)
            if (!st.done[k][i]) work.emplace_back(i, k);

    RsEvaluator ev(2.0 * cfg.t + max_hw + 10.0);
    std::mutex write_mutex;
    std::ofstream ckpt;
    if (!cfg.checkpoint_path.empty()) {
        ckpt.open(cfg.checkpoint_path, std::ios::app | std::ios::binary);
        if (!ckpt)
            throw std::runtime_error("run_experiment: cannot open checkpoint for append");
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error_msg;
    int nw = resolve_workers(cfg.workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::size_t idx = next.fetch_add(1);
                if (idx >= work.size() || failed.load()) return;
                auto [i, k] = work[idx];
                try {
                    double tau = sample_tau(cfg.t, cfg.seed, i);
                    ZetaSample s = interval_max(ev, tau, cfg.t, cfg.thetas[k], i);
                    std::lock_guard<std::mutex> lock(write_mutex);
                    st.samples[k][i] = s;
                    st.done[k][i] = 1;
                    if (ckpt.is_open()) {
                        ckpt << checkpoint_line(i, s) << '\n';
                        ckpt.flush();
                    }
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(write_mutex);
                    failed.store(true);
                    error_msg = e.what();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failed.load())
        throw std::runtime_error("run_experiment: " + error_msg);

    ExperimentSamples out;
    out.config = cfg;
    out.by_theta = std::move(st.samples);
    return out;
}

std::vector<ExperimentReport> run_experiment(const ExperimentConfig& cfg) {
    ExperimentSamples data = run_experiment_samples(cfg);
    PrimeTable primes = sieve_primes(cfg.prime_limit);

    std::vector<ExperimentReport> reports;
    for (std::size_t k = 0; k < cfg.thetas.size(); ++k) {
        const auto& vals = data.by_theta[k];
        double mean = 0.0;
        for (const auto& s : vals) mean += s.max_log_abs;
        mean /= static_cast<double>(vals.size());
        double ss = 0.0;
        for (const auto& s : vals) {
            double d = s.max_log_abs - mean;
            ss += d * d;
        }
        double stddev = std::sqrt(ss / static_cast<double>(vals.size() - 1));

        PredictionInput pin{cfg.t, cfg.thetas[k], true, cfg.prime_limit};
        Prediction corr = predict(pin, primes);
        pin.use_correction = false;
        Prediction unc = predict(pin, primes);

        ExperimentReport r;
        r.t = cfg.t;
        r.theta = cfg.thetas[k];
        r.sample_size = cfg.sample_size;
        r.empirical_mean = mean;
        r.empirical_std = stddev;
        r.std_error = stddev / std::sqrt(static_cast<double>(vals.size()));
        r.ratio_corrected = mean / corr.predicted_mean;
        r.ratio_uncorrected = mean / unc.predicted_mean;
        reports.push_back(r);
    }
    return reports;
}

std::int64_t count_sign_changes(const RsEvaluator& ev, double a, double b,
                                double step) {
    if (!(step > 0.0) || !(b > a))
        throw std::domain_error("count_sign_changes: bad interval or step");
    std::int64_t flips = 0;
    double prev = ev.z(a);
    for (double t = a + step; t < b + 0.5 * step; t += step) {
        double cur = ev.z(std::min(t, b));
        if ((prev < 0.0 && cur > 0.0) || (prev > 0.0 && cur < 0.0)) ++flips;
        if (cur != 0.0) prev = cur;
    }
    return flips;
}

} // namespace zetamax
