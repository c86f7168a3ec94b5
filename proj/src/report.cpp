#include "zetamax/report.hpp"

#include "zetamax/moments.hpp"
#include "zetamax/prediction.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>

namespace zetamax {

namespace {

using nlohmann::json;

struct ThetaGroup {
    std::vector<double> values; // max_log_abs by sample index
    double mean = 0.0;
    double stddev = 0.0;
    double std_error = 0.0;
};

std::map<double, ThetaGroup> group_by_theta(const std::vector<ResultRow>& rows) {
    std::map<double, std::map<std::uint64_t, double>> grouped;
    for (const auto& r : rows) grouped[r.theta][r.i] = r.max_log_abs;
    std::map<double, ThetaGroup> out;
    for (auto& [theta, byi] : grouped) {
        ThetaGroup g;
        std::uint64_t expect = 0;
        for (auto& [i, v] : byi) {
            if (i != expect)
                throw std::runtime_error(
                    "results file: missing sample index " +
                    std::to_string(expect) + " at theta " + fmt_double(theta));
            g.values.push_back(v);
            ++expect;
        }
        double mean = 0.0;
        for (double v : g.values) mean += v;
        mean /= static_cast<double>(g.values.size());
        double ss = 0.0;
        for (double v : g.values) ss += (v - mean) * (v - mean);
        g.mean = mean;
        g.stddev = g.values.size() > 1
                       ? std::sqrt(ss / static_cast<double>(g.values.size() - 1))
                       : 0.0;
        g.std_error = g.stddev / std::sqrt(static_cast<double>(g.values.size()));
        out[theta] = std::move(g);
    }
    return out;
}

bool is_integer(double x) { return x == std::floor(x); }

} // namespace

std::vector<ResultRow> load_results(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read results file " + path);
    std::string content((std::istreambuf_iterator<char>(in)),
                        std::istreambuf_iterator<char>());
    std::vector<ResultRow> rows;
    std::size_t pos = 0;
    while (pos < content.size()) {
        std::size_t nl = content.find('\n', pos);
        bool torn = (nl == std::string::npos);
        std::string line = content.substr(pos, torn ? std::string::npos : nl - pos);
        pos = torn ? content.size() : nl + 1;
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        bool ok = !j.is_discarded() && j.contains("i") && j.contains("theta") &&
                  j.contains("tau") && j.contains("max") &&
                  j.contains("argmax") && j.contains("n_points");
        if (!ok) {
            if (torn) break;
            throw std::runtime_error("results file corrupt: unparseable line");
        }
        ResultRow r;
        r.i = j["i"].get<std::uint64_t>();
        r.theta = j["theta"].get<double>();
        r.tau = j["tau"].get<double>();
        r.max_log_abs = j["max"].get<double>();
        r.argmax_offset = j["argmax"].get<double>();
        r.n_points = j["n_points"].get<std::int64_t>();
        rows.push_back(r);
    }
    if (rows.empty())
        throw std::runtime_error("results file is empty: " + path);
    return rows;
}

ReportPaths write_report(const std::string& results_path, double t,
                         std::uint64_t prime_limit, const std::string& out_base,
                         bool json_mirror) {
    auto rows = load_results(results_path);
    auto groups = group_by_theta(rows);

    PrimeTable primes = sieve_primes(prime_limit);
    struct PredPair {
        Prediction corr, unc;
    };
    std::map<double, PredPair> preds;
    for (const auto& [theta, g] : groups) {
        PredictionInput pin{t, theta, true, prime_limit};
        Prediction corr = predict(pin, primes);
        pin.use_correction = false;
        preds[theta] = {corr, predict(pin, primes)};
    }

    ReportPaths paths;
    paths.ratios_csv = out_base + "_ratios.csv";
    paths.mean_csv = out_base + "_mean.csv";
    paths.std_csv = out_base + "_std.csv";

    Table ratios;
    ratios.schema = "zetamax.ratios.v1";
    ratios.columns = {"theta",     "sample_size",       "empirical_mean",
                      "std_error", "ratio_uncorrected", "ratio_corrected"};
    for (const auto& [theta, g] : groups) {
        if (!is_integer(theta)) continue;
        const auto& p = preds.at(theta);
        ratios.add_row({theta, static_cast<double>(g.values.size()), g.mean,
                        g.std_error, g.mean / p.unc.predicted_mean,
                        g.mean / p.corr.predicted_mean});
    }
    ratios.write_csv(paths.ratios_csv);

    Table mean;
    mean.schema = "zetamax.mean_curve.v1";
    mean.columns = {"theta", "empirical_mean", "std_error",
                    "predicted_mean_uncorrected", "predicted_mean_corrected"};
    for (const auto& [theta, g] : groups) {
        const auto& p = preds.at(theta);
        mean.add_row({theta, g.mean, g.std_error, p.unc.predicted_mean,
                      p.corr.predicted_mean});
    }
    mean.write_csv(paths.mean_csv);

    Table std_t;
    std_t.schema = "zetamax.std_curve.v1";
    std_t.columns = {"theta", "empirical_std", "predicted_std_uncorrected",
                     "predicted_std_corrected"};
    for (const auto& [theta, g] : groups) {
        const auto& p = preds.at(theta);
        std_t.add_row({theta, g.stddev, p.unc.predicted_std,
                       p.corr.predicted_std});
    }
    std_t.write_csv(paths.std_csv);

    if (json_mirror) {
        ratios.write_json(paths.ratios_csv + ".json");
        mean.write_json(paths.mean_csv + ".json");
        std_t.write_json(paths.std_csv + ".json");
    }
    return paths;
}

std::string figure_data(FigureKind kind, const FigureInputs& in,
                        const std::string& out_path, bool json_mirror) {
    Table t;
    switch (kind) {
    case FigureKind::kCoeffCurve: {
        PrimeTable primes = sieve_primes(in.prime_limit);
        t.schema = "zetamax.coeff_curve.v1";
        t.columns = {"theta", "k", "a_k", "f_k", "c_k", "c_k_times_2pi2"};
        constexpr double kTwoPiSq = 19.739208802178717237668981999752;
        for (int i = 0; i <= 150; ++i) {
            double theta = 0.02 * i;
            double k = std::sqrt(1.0 + theta);
            MomentCoefficient mc = moment_coefficient(k, primes);
            t.add_row({theta, k, mc.a_k, mc.f_k, mc.c_k, mc.c_k * kTwoPiSq});
        }
        break;
    }
    case FigureKind::kMeanCurve:
    case FigureKind::kStdCurve: {
        auto rows = load_results(in.results_path);
        auto groups = group_by_theta(rows);
        PrimeTable primes = sieve_primes(in.prime_limit);
        if (kind == FigureKind::kMeanCurve) {
            t.schema = "zetamax.mean_curve.v1";
            t.columns = {"theta", "empirical_mean", "std_error",
                         "predicted_mean_uncorrected", "predicted_mean_corrected"};
        } else {
            t.schema = "zetamax.std_curve.v1";
            t.columns = {"theta", "empirical_std", "predicted_std_uncorrected",
                         "predicted_std_corrected"};
        }
        for (const auto& [theta, g] : groups) {
            PredictionInput pin{in.t, theta, true, in.prime_limit};
            Prediction corr = predict(pin, primes);
            pin.use_correction = false;
            Prediction unc = predict(pin, primes);
            if (kind == FigureKind::kMeanCurve)
                t.add_row({theta, g.mean, g.std_error, unc.predicted_mean,
                           corr.predicted_mean});
            else
                t.add_row({theta, g.stddev, unc.predicted_std,
                           corr.predicted_std});
        }
        break;
    }
    case FigureKind::kDisplacement: {
        auto rows = load_results(in.results_path);
        PrimeTable primes = sieve_primes(in.prime_limit);
        std::map<double, std::pair<double, double>> pred_means;
        for (const auto& r : rows) {
            if (pred_means.count(r.theta)) continue;
            PredictionInput pin{in.t, r.theta, true, in.prime_limit};
            Prediction corr = predict(pin, primes);
            pin.use_correction = false;
            Prediction unc = predict(pin, primes);
            pred_means[r.theta] = {corr.predicted_mean, unc.predicted_mean};
        }
        t.schema = "zetamax.displacement.v1";
        t.columns = {"theta", "i", "displacement_corrected",
                     "displacement_uncorrected"};
        std::vector<ResultRow> sorted = rows;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            return a.theta != b.theta ? a.theta < b.theta : a.i < b.i;
        });
        for (const auto& r : sorted) {
            auto [pc, pu] = pred_means.at(r.theta);
            t.add_row({r.theta, static_cast<double>(r.i),
                       (r.max_log_abs - pc) / pc, (r.max_log_abs - pu) / pu});
        }
        break;
    }
    }
    t.write_csv(out_path);
    if (json_mirror) t.write_json(out_path + ".json");
    return out_path;
}

} // namespace zetamax
