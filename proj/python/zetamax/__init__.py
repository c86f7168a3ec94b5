"""Moment constants and extreme-value statistics of the Riemann zeta
function on the critical line: conjectured moment coefficients C_k,
finite-size Gumbel predictions for interval maxima of log|zeta|, a
Riemann-Siegel evaluator, and CUE characteristic-polynomial sampling."""

from zetamax._core import (  # noqa: F401
    CueDraw,
    CumulantTable,
    ExperimentReport,
    GridSpec,
    MomentCoefficient,
    Prediction,
    PredictionInput,
    PrimeTable,
    TailResult,
    ZetaSample,
    a_coefficients,
    arithmetic_factor,
    cumulants,
    density_expansion,
    fluctuation_cdf,
    fluctuation_mean,
    fluctuation_survival,
    gaussian_upper_tail,
    interval_max,
    log_barnes_g,
    log_gamma,
    log_gaussian_upper_tail,
    mgf,
    moment_coefficient,
    predict,
    riemann_siegel_Z,
    riemann_siegel_theta,
    rmt_factor,
    run_experiment,
    sample_log_abs_poly,
    sample_tau,
    sieve_primes,
    sigma_t,
    solve_y_star,
    tail_experiment,
    zero_count,
)

__version__ = "0.1.0"
