#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace zetamax {

// Uniform evaluation grid for one interval maximum.
struct GridSpec {
    double t_center = 0.0;   // tau
    double half_width = 0.0; // pi (log T)^theta
    double spacing = 0.0;    // 2 pi / log(T / 2 pi)
    std::int64_t n_points = 0;

    static GridSpec make(double tau, double t_scale, double theta);
    // offsets run symmetrically about t_center: (i - (n-1)/2) * spacing
    double offset(std::int64_t i) const;
};

struct ZetaSample {
    double tau = 0.0;
    double theta = 0.0;
    double max_log_abs = 0.0;
    double argmax_offset = 0.0;
    std::int64_t n_points = 0;
    std::uint64_t seed_index = 0;
};

struct ExperimentReport {
    double t = 0.0;
    double theta = 0.0;
    std::uint64_t sample_size = 0;
    double empirical_mean = 0.0;
    double empirical_std = 0.0; // sample standard deviation (n-1)
    double std_error = 0.0;
    double ratio_corrected = 0.0;
    double ratio_uncorrected = 0.0;
};

// Riemann-Siegel evaluator with per-table precomputation (1/sqrt n and
// double-double log n up to the main-sum length needed for t_max). Const
// and safe to share across threads.
class RsEvaluator {
  public:
    explicit RsEvaluator(double t_max);

    /// Z(t) with the C0..C3 remainder terms; |Z(t)| = |zeta(1/2+it)|.
    /// Domain: 1e5 <= t <= t_max (absolute error <= 1e-6 up to 1e10).
    double z(double t) const;

    /// log|Z(t)|, clamped below at -50 so grid points that straddle a zero
    /// stay finite.
    double log_abs_z(double t) const;

    double t_max() const { return t_max_; }

  private:
    double t_max_ = 0.0;
    std::vector<double> rsqrt_;  // 1/sqrt(n)
    std::vector<double> log_hi_; // log n, double-double
    std::vector<double> log_lo_;
};

/// Convenience wrapper over a cached thread-local evaluator.
double riemann_siegel_Z(double t);

/// Maximum of log|Z| over the grid for (tau, T, theta).
ZetaSample interval_max(const RsEvaluator& ev, double tau, double t_scale,
                        double theta, std::uint64_t seed_index = 0);
ZetaSample interval_max(double tau, double t_scale, double theta);

/// tau_i uniform on [T, 2T], a pure function of (seed, index).
double sample_tau(double t_scale, std::uint64_t seed, std::uint64_t index);

struct ExperimentConfig {
    double t = 0.0;
    std::vector<double> thetas;
    std::uint64_t sample_size = 0;
    std::uint64_t seed = 0;
    std::string checkpoint_path; // empty disables checkpointing
    int workers = 0;             // 0 = hardware concurrency
    std::uint64_t prime_limit = 1'000'000;
};

/// Monte Carlo experiment: draws tau_i, computes interval maxima for every
/// theta, aggregates mean/std and ratios against both prediction modes.
/// Appends each completed sample to the checkpoint (JSON lines) and resumes
/// losslessly from it. Reports are bit-identical for a fixed seed
/// independent of worker count.
std::vector<ExperimentReport> run_experiment(const ExperimentConfig& config);

/// Per-sample values from a finished (or resumed) run, ordered by
/// (theta index, sample index): exposed for report/figure generation.
struct ExperimentSamples {
    ExperimentConfig config;
    std::vector<std::vector<ZetaSample>> by_theta;
};
ExperimentSamples run_experiment_samples(const ExperimentConfig& config);

/// Count sign changes of Z on [a, b] with the given scan step.
std::int64_t count_sign_changes(const RsEvaluator& ev, double a, double b,
                                double step);

} // namespace zetamax
