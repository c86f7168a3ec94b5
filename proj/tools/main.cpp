#include "zetamax/cue.hpp"
#include "zetamax/io.hpp"
#include "zetamax/moments.hpp"
#include "zetamax/prediction.hpp"
#include "zetamax/report.hpp"
#include "zetamax/zeta.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace zetamax;

// "a,b,c" or "a:step:b" -> list of doubles.
std::vector<double> parse_list_or_range(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        double a, step, b;
        char c1, c2;
        std::istringstream ss(spec);
        if (!(ss >> a >> c1 >> step >> c2 >> b) || c1 != ':' || c2 != ':' ||
            !(step > 0.0))
            throw std::domain_error("bad range spec (want a:step:b): " + spec);
        for (double v = a; v <= b + 1e-12 * step; v += step)
            out.push_back(std::min(v, b));
    } else {
        std::istringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw std::domain_error("empty value list: " + spec);
    return out;
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += ' ';
        s += argv[i];
    }
    return s;
}

struct GlobalOpts {
    std::string config_path;
    Config config;
    std::string command_line;
};

void emit_manifest(const GlobalOpts& g, const std::string& out_path,
                   std::uint64_t seed, const std::string& digest) {
    RunManifest m;
    m.command_line = g.command_line;
    m.seed = seed;
    m.timestamp = iso8601_now();
    m.input_digest = digest;
    write_manifest(out_path, m);
}

std::uint64_t config_u64(const Config& cfg, const std::string& key,
                         std::uint64_t fallback) {
    if (auto v = cfg.get(key)) return std::stoull(*v);
    return fallback;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"moment constants and extreme-value statistics of zeta on "
                 "the critical line"};
    app.require_subcommand(1);

    GlobalOpts g;
    g.command_line = join_args(argc, argv);
    app.add_option("--config", g.config_path, "key = value configuration file");

    // ---- constants
    auto* c_cmd = app.add_subcommand("constants", "moment coefficients C_k");
    std::string c_k_spec;
    std::uint64_t c_prime_limit = 0;
    std::string c_out = "constants.csv";
    bool c_json = false;
    c_cmd->add_option("--k", c_k_spec, "list a,b,c or range a:step:b")->required();
    c_cmd->add_option("--prime-limit", c_prime_limit, "sieve bound");
    c_cmd->add_option("--out", c_out, "output CSV path");
    c_cmd->add_flag("--json", c_json, "also write a JSON mirror");

    // ---- predict
    auto* p_cmd = app.add_subcommand("predict", "finite-size maximum prediction");
    double p_t = 0.0;
    std::string p_theta_spec;
    bool p_no_corr = false, p_json = false;
    std::uint64_t p_prime_limit = 0;
    std::string p_out = "predict.csv";
    p_cmd->add_option("--t", p_t, "height T")->required();
    p_cmd->add_option("--theta", p_theta_spec, "list or range")->required();
    p_cmd->add_flag("--no-correction", p_no_corr, "use C = 1");
    p_cmd->add_option("--prime-limit", p_prime_limit, "sieve bound");
    p_cmd->add_option("--out", p_out, "output CSV path");
    p_cmd->add_flag("--json", p_json, "also write a JSON mirror");

    // ---- sample-zeta
    auto* z_cmd = app.add_subcommand("sample-zeta", "Monte Carlo interval maxima");
    double z_t = 0.0;
    std::string z_theta_spec;
    std::uint64_t z_samples = 0, z_seed = 0, z_prime_limit = 0;
    int z_workers = 0;
    std::string z_checkpoint, z_out = "zeta_report.csv";
    bool z_json = false;
    z_cmd->add_option("--t", z_t, "height T")->required();
    z_cmd->add_option("--theta", z_theta_spec, "list or range")->required();
    z_cmd->add_option("--samples", z_samples, "sample size per theta")->required();
    z_cmd->add_option("--seed", z_seed, "RNG seed");
    z_cmd->add_option("--workers", z_workers, "worker threads");
    z_cmd->add_option("--checkpoint", z_checkpoint, "JSONL checkpoint path");
    z_cmd->add_option("--out", z_out, "report CSV path");
    z_cmd->add_option("--prime-limit", z_prime_limit, "sieve bound for ratios");
    z_cmd->add_flag("--json", z_json, "also write a JSON mirror");

    // ---- sample-cue
    auto* u_cmd = app.add_subcommand("sample-cue", "CUE tail-ratio experiment");
    int u_n = 0;
    double u_k = 0.0;
    std::uint64_t u_samples = 0, u_seed = 0;
    int u_workers = 0;
    std::string u_out = "cue_report.csv";
    bool u_json = false;
    u_cmd->add_option("--n", u_n, "matrix dimension")->required();
    u_cmd->add_option("--k", u_k, "deviation index in (0, 1.5]")->required();
    u_cmd->add_option("--samples", u_samples, "draw count")->required();
    u_cmd->add_option("--seed", u_seed, "RNG seed");
    u_cmd->add_option("--workers", u_workers, "worker threads");
    u_cmd->add_option("--out", u_out, "output CSV path");
    u_cmd->add_flag("--json", u_json, "also write a JSON mirror");

    // ---- report
    auto* r_cmd = app.add_subcommand("report", "join samples with predictions");
    std::string r_results, r_out = "report";
    double r_t = 0.0;
    std::uint64_t r_prime_limit = 0;
    bool r_json = false;
    r_cmd->add_option("--results", r_results, "sample-zeta checkpoint JSONL")
        ->required();
    r_cmd->add_option("--t", r_t, "height T of the run")->required();
    r_cmd->add_option("--prime-limit", r_prime_limit, "sieve bound");
    r_cmd->add_option("--out", r_out, "output base path");
    r_cmd->add_flag("--json", r_json, "also write JSON mirrors");

    // ---- figure-data
    auto* f_cmd = app.add_subcommand("figure-data", "plot-ready data files");
    std::string f_kind, f_results, f_out = "figure.csv";
    double f_t = 0.0;
    std::uint64_t f_prime_limit = 0;
    bool f_json = false;
    f_cmd->add_option("--kind", f_kind,
                      "coeff_curve | mean_curve | std_curve | displacement")
        ->required();
    f_cmd->add_option("--results", f_results, "sample-zeta checkpoint JSONL");
    f_cmd->add_option("--t", f_t, "height T of the run");
    f_cmd->add_option("--prime-limit", f_prime_limit, "sieve bound");
    f_cmd->add_option("--out", f_out, "output CSV path");
    f_cmd->add_flag("--json", f_json, "also write a JSON mirror");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (!g.config_path.empty()) g.config = Config::load(g.config_path);

        if (*c_cmd) {
            if (c_prime_limit == 0)
                c_prime_limit = config_u64(g.config, "prime-limit", 1'000'000);
            PrimeTable primes = sieve_primes(c_prime_limit);
            Table t;
            t.schema = "zetamax.constants.v1";
            t.columns = {"k", "a_k", "f_k", "C_k"};
            for (double k : parse_list_or_range(c_k_spec)) {
                MomentCoefficient mc = moment_coefficient(k, primes);
                t.add_row({mc.k, mc.a_k, mc.f_k, mc.c_k});
            }
            t.write_csv(c_out);
            if (c_json) t.write_json(c_out + ".json");
            emit_manifest(g, c_out, 0,
                          fnv1a_hex("constants k=" + c_k_spec + " limit=" +
                                    std::to_string(c_prime_limit)));
        } else if (*p_cmd) {
            if (p_prime_limit == 0)
                p_prime_limit = config_u64(g.config, "prime-limit", 1'000'000);
            PrimeTable primes = sieve_primes(p_prime_limit);
            Table t;
            t.schema = "zetamax.predict.v1";
            t.columns = {"theta", "N",          "sigma",      "C",
                         "Y_star", "shift",      "beta",       "fluct_mean",
                         "predicted_mean", "predicted_std"};
            auto thetas = parse_list_or_range(p_theta_spec);
            for (double theta : thetas) {
                if (theta == 0.0)
                    t.comments.push_back(
                        "theta=0: model not expected to hold at this endpoint");
            }
            for (double theta : thetas) {
                PredictionInput in{p_t, theta, !p_no_corr, p_prime_limit};
                Prediction pr = predict(in, primes);
                t.add_row({pr.theta, pr.n_points, pr.sigma, pr.c_used, pr.y_star,
                           pr.shift, pr.beta, pr.fluct_mean, pr.predicted_mean,
                           pr.predicted_std});
            }
            t.write_csv(p_out);
            if (p_json) t.write_json(p_out + ".json");
            std::ostringstream dig;
            dig << "predict t=" << fmt_double(p_t) << " theta=" << p_theta_spec
                << " corr=" << (!p_no_corr) << " limit=" << p_prime_limit;
            emit_manifest(g, p_out, 0, fnv1a_hex(dig.str()));
        } else if (*z_cmd) {
            ExperimentConfig cfg;
            cfg.t = z_t;
            cfg.thetas = parse_list_or_range(z_theta_spec);
            cfg.sample_size = z_samples;
            cfg.seed = z_seed ? z_seed : config_u64(g.config, "seed", 0);
            cfg.workers = resolve_worker_count(z_workers, g.config);
            cfg.checkpoint_path = z_checkpoint;
            cfg.prime_limit =
                z_prime_limit ? z_prime_limit
                              : config_u64(g.config, "prime-limit", 1'000'000);
            auto reports = run_experiment(cfg);
            Table t;
            t.schema = "zetamax.report.v1";
            t.columns = {"t",           "theta",         "sample_size",
                         "empirical_mean", "empirical_std", "std_error",
                         "ratio_corrected", "ratio_uncorrected"};
            for (const auto& r : reports)
                t.add_row({r.t, r.theta, static_cast<double>(r.sample_size),
                           r.empirical_mean, r.empirical_std, r.std_error,
                           r.ratio_corrected, r.ratio_uncorrected});
            t.write_csv(z_out);
            if (z_json) t.write_json(z_out + ".json");
            std::ostringstream dig;
            dig << "sample-zeta t=" << fmt_double(z_t) << " theta="
                << z_theta_spec << " samples=" << z_samples << " seed="
                << cfg.seed;
            emit_manifest(g, z_out, cfg.seed, fnv1a_hex(dig.str()));
        } else if (*u_cmd) {
            int workers = resolve_worker_count(u_workers, g.config);
            std::uint64_t seed = u_seed ? u_seed : config_u64(g.config, "seed", 0);
            TailResult r = tail_experiment(u_n, u_k, u_samples, seed, workers);
            Table t;
            t.schema = "zetamax.cue_tail.v1";
            t.columns = {"n",     "k",         "V",        "p_hat",
                         "gaussian_tail", "ratio", "std_error", "f_k_target"};
            t.add_row({static_cast<double>(r.n), r.k, r.v, r.p_hat,
                       r.gaussian_tail, r.ratio, r.std_error, r.f_k_target});
            t.write_csv(u_out);
            if (u_json) t.write_json(u_out + ".json");
            std::ostringstream dig;
            dig << "sample-cue n=" << u_n << " k=" << fmt_double(u_k)
                << " samples=" << u_samples << " seed=" << seed;
            emit_manifest(g, u_out, seed, fnv1a_hex(dig.str()));
        } else if (*r_cmd) {
            if (r_prime_limit == 0)
                r_prime_limit = config_u64(g.config, "prime-limit", 1'000'000);
            ReportPaths paths =
                write_report(r_results, r_t, r_prime_limit, r_out, r_json);
            std::string digest = fnv1a_file(r_results);
            emit_manifest(g, paths.ratios_csv, 0, digest);
            emit_manifest(g, paths.mean_csv, 0, digest);
            emit_manifest(g, paths.std_csv, 0, digest);
        } else if (*f_cmd) {
            if (f_prime_limit == 0)
                f_prime_limit = config_u64(g.config, "prime-limit", 1'000'000);
            FigureKind kind;
            if (f_kind == "coeff_curve") kind = FigureKind::kCoeffCurve;
            else if (f_kind == "mean_curve") kind = FigureKind::kMeanCurve;
            else if (f_kind == "std_curve") kind = FigureKind::kStdCurve;
            else if (f_kind == "displacement") kind = FigureKind::kDisplacement;
            else throw std::domain_error("unknown figure kind: " + f_kind);
            if (kind != FigureKind::kCoeffCurve && f_results.empty())
                throw std::domain_error("figure-data: --results required for " +
                                        f_kind);
            FigureInputs in;
            in.results_path = f_results;
            in.t = f_t;
            in.prime_limit = f_prime_limit;
            figure_data(kind, in, f_out, f_json);
            std::string digest = f_results.empty()
                                     ? fnv1a_hex("figure " + f_kind)
                                     : fnv1a_file(f_results);
            emit_manifest(g, f_out, 0, digest);
        }
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
