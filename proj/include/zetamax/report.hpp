#pragma once

#include "zetamax/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zetamax {

// Per-sample record parsed back from a sample-zeta results file (the
// checkpoint JSON-lines format).
struct ResultRow {
    std::uint64_t i = 0;
    double theta = 0.0;
    double tau = 0.0;
    double max_log_abs = 0.0;
    double argmax_offset = 0.0;
    std::int64_t n_points = 0;
};

/// Strict loader: malformed interior lines throw, a torn final line is
/// dropped, an empty file is an error.
std::vector<ResultRow> load_results(const std::string& path);

struct ReportPaths {
    std::string ratios_csv;
    std::string mean_csv;
    std::string std_csv;
};

/// Joins empirical per-theta statistics with both prediction modes and
/// writes the ratio table (integer theta), the mean-vs-theta series and the
/// std-vs-theta series under out_base. json_mirror also writes .json twins.
ReportPaths write_report(const std::string& results_path, double t,
                         std::uint64_t prime_limit,
                         const std::string& out_base, bool json_mirror = false);

enum class FigureKind { kCoeffCurve, kMeanCurve, kStdCurve, kDisplacement };

struct FigureInputs {
    std::string results_path; // for mean/std/displacement kinds
    double t = 0.0;
    std::uint64_t prime_limit = 1'000'000;
};

/// Emits plot-ready CSV for the requested figure; returns the output path.
std::string figure_data(FigureKind kind, const FigureInputs& inputs,
                        const std::string& out_path, bool json_mirror = false);

} // namespace zetamax
