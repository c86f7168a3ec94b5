#include "zetamax/cue.hpp"
#include "zetamax/moments.hpp"
#include "zetamax/prediction.hpp"
#include "zetamax/special.hpp"
#include "zetamax/zeta.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zetamax;

PYBIND11_MODULE(_core, m) {
    m.doc() = "moment constants and extreme-value statistics of zeta on the "
              "critical line";

    // special functions
    m.def("log_gamma", &log_gamma, py::arg("x"));
    m.def("gaussian_upper_tail", &gaussian_upper_tail, py::arg("y"));
    m.def("log_gaussian_upper_tail", &log_gaussian_upper_tail, py::arg("y"));
    m.def("log_barnes_g", &log_barnes_g, py::arg("z"));
    m.def("riemann_siegel_theta", &riemann_siegel_theta, py::arg("t"));

    // moment coefficients
    py::class_<PrimeTable>(m, "PrimeTable")
        .def_readonly("limit", &PrimeTable::limit)
        .def_readonly("primes", &PrimeTable::primes);
    m.def("sieve_primes", &sieve_primes, py::arg("limit"));
    py::class_<MomentCoefficient>(m, "MomentCoefficient")
        .def_readonly("k", &MomentCoefficient::k)
        .def_readonly("a_k", &MomentCoefficient::a_k)
        .def_readonly("f_k", &MomentCoefficient::f_k)
        .def_readonly("c_k", &MomentCoefficient::c_k);
    m.def("arithmetic_factor", &arithmetic_factor, py::arg("k"),
          py::arg("primes"), py::arg("tail_tol") = 1e-6);
    m.def("rmt_factor", &rmt_factor, py::arg("k"));
    m.def("moment_coefficient", &moment_coefficient, py::arg("k"),
          py::arg("primes"));

    // prediction
    py::class_<PredictionInput>(m, "PredictionInput")
        .def(py::init<>())
        .def_readwrite("t", &PredictionInput::t)
        .def_readwrite("theta", &PredictionInput::theta)
        .def_readwrite("use_correction", &PredictionInput::use_correction)
        .def_readwrite("prime_limit", &PredictionInput::prime_limit);
    py::class_<Prediction>(m, "Prediction")
        .def_readonly("t", &Prediction::t)
        .def_readonly("theta", &Prediction::theta)
        .def_readonly("n_points", &Prediction::n_points)
        .def_readonly("sigma", &Prediction::sigma)
        .def_readonly("c_used", &Prediction::c_used)
        .def_readonly("y_star", &Prediction::y_star)
        .def_readonly("shift", &Prediction::shift)
        .def_readonly("beta", &Prediction::beta)
        .def_readonly("m_const", &Prediction::m_const)
        .def_readonly("fluct_mean", &Prediction::fluct_mean)
        .def_readonly("fluct_std", &Prediction::fluct_std)
        .def_readonly("predicted_mean", &Prediction::predicted_mean)
        .def_readonly("predicted_std", &Prediction::predicted_std)
        .def_readonly("theta_zero_caveat", &Prediction::theta_zero_caveat);
    m.def("zero_count", &zero_count, py::arg("t"), py::arg("theta"));
    m.def("sigma_t", &sigma_t, py::arg("t"));
    m.def("solve_y_star", &solve_y_star, py::arg("n_points"), py::arg("c"),
          py::arg("tol") = 1e-13);
    m.def("fluctuation_cdf", &fluctuation_cdf, py::arg("y"), py::arg("y_star"),
          py::arg("sigma"));
    m.def("fluctuation_survival", &fluctuation_survival, py::arg("y"),
          py::arg("y_star"), py::arg("sigma"));
    m.def("fluctuation_mean", &fluctuation_mean, py::arg("y_star"),
          py::arg("sigma"));
    m.def(
        "predict",
        [](const PredictionInput& in) { return predict(in); },
        py::arg("input"));

    // zeta evaluation and experiment
    py::class_<GridSpec>(m, "GridSpec")
        .def_static("make", &GridSpec::make, py::arg("tau"), py::arg("t_scale"),
                    py::arg("theta"))
        .def_readonly("t_center", &GridSpec::t_center)
        .def_readonly("half_width", &GridSpec::half_width)
        .def_readonly("spacing", &GridSpec::spacing)
        .def_readonly("n_points", &GridSpec::n_points)
        .def("offset", &GridSpec::offset, py::arg("i"));
    py::class_<ZetaSample>(m, "ZetaSample")
        .def_readonly("tau", &ZetaSample::tau)
        .def_readonly("theta", &ZetaSample::theta)
        .def_readonly("max_log_abs", &ZetaSample::max_log_abs)
        .def_readonly("argmax_offset", &ZetaSample::argmax_offset)
        .def_readonly("n_points", &ZetaSample::n_points)
        .def_readonly("seed_index", &ZetaSample::seed_index);
    py::class_<ExperimentReport>(m, "ExperimentReport")
        .def_readonly("t", &ExperimentReport::t)
        .def_readonly("theta", &ExperimentReport::theta)
        .def_readonly("sample_size", &ExperimentReport::sample_size)
        .def_readonly("empirical_mean", &ExperimentReport::empirical_mean)
        .def_readonly("empirical_std", &ExperimentReport::empirical_std)
        .def_readonly("std_error", &ExperimentReport::std_error)
        .def_readonly("ratio_corrected", &ExperimentReport::ratio_corrected)
        .def_readonly("ratio_uncorrected", &ExperimentReport::ratio_uncorrected);
    m.def("riemann_siegel_Z", &riemann_siegel_Z, py::arg("t"));
    m.def(
        "interval_max",
        [](double tau, double t_scale, double theta) {
            return interval_max(tau, t_scale, theta);
        },
        py::arg("tau"), py::arg("t_scale"), py::arg("theta"));
    m.def("sample_tau", &sample_tau, py::arg("t_scale"), py::arg("seed"),
          py::arg("index"));
    m.def(
        "run_experiment",
        [](double t, const std::vector<double>& thetas, std::uint64_t samples,
           std::uint64_t seed, const std::string& checkpoint, int workers,
           std::uint64_t prime_limit) {
            ExperimentConfig cfg;
            cfg.t = t;
            cfg.thetas = thetas;
            cfg.sample_size = samples;
            cfg.seed = seed;
            cfg.checkpoint_path = checkpoint;
            cfg.workers = workers;
            cfg.prime_limit = prime_limit;
            return run_experiment(cfg);
        },
        py::arg("t"), py::arg("thetas"), py::arg("samples"), py::arg("seed"),
        py::arg("checkpoint") = std::string(), py::arg("workers") = 0,
        py::arg("prime_limit") = 1'000'000,
        py::call_guard<py::gil_scoped_release>());

    // CUE
    py::class_<CumulantTable>(m, "CumulantTable")
        .def_readonly("n", &CumulantTable::n)
        .def_readonly("m_max", &CumulantTable::m_max)
        .def_readonly("q", &CumulantTable::q);
    py::class_<CueDraw>(m, "CueDraw")
        .def_readonly("n", &CueDraw::n)
        .def_readonly("value", &CueDraw::value)
        .def_readonly("seed_index", &CueDraw::seed_index);
    py::class_<TailResult>(m, "TailResult")
        .def_readonly("n", &TailResult::n)
        .def_readonly("k", &TailResult::k)
        .def_readonly("v", &TailResult::v)
        .def_readonly("p_hat", &TailResult::p_hat)
        .def_readonly("gaussian_tail", &TailResult::gaussian_tail)
        .def_readonly("ratio", &TailResult::ratio)
        .def_readonly("std_error", &TailResult::std_error)
        .def_readonly("f_k_target", &TailResult::f_k_target)
        .def_readonly("samples", &TailResult::samples);
    m.def("mgf", &mgf, py::arg("n"), py::arg("s"));
    m.def("cumulants", &cumulants, py::arg("n"), py::arg("m_max"));
    m.def("a_coefficients", &a_coefficients, py::arg("table"));
    m.def("density_expansion", &density_expansion, py::arg("x"),
          py::arg("table"));
    m.def("sample_log_abs_poly", &sample_log_abs_poly, py::arg("n"),
          py::arg("seed"), py::arg("seed_index"));
    m.def("tail_experiment", &tail_experiment, py::arg("n"), py::arg("k"),
          py::arg("samples"), py::arg("seed"), py::arg("workers") = 0,
          py::call_guard<py::gil_scoped_release>());
}
