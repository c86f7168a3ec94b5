#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace zetamax {

inline constexpr const char* kCodeVersion = "0.1.0";

// Sidecar metadata emitted next to every output file. Identical manifests
// imply bit-identical outputs; the timestamp is informational only.
struct RunManifest {
    std::string command_line;
    std::uint64_t seed = 0;
    std::string code_version = kCodeVersion;
    std::string timestamp;
    std::string input_digest;
};

/// Writes <output_path>.manifest.json.
void write_manifest(const std::string& output_path, const RunManifest& m);

/// FNV-1a 64-bit digest of a byte string, as fixed-width hex.
std::string fnv1a_hex(const std::string& bytes);

/// Digest of a file's contents; throws if unreadable.
std::string fnv1a_file(const std::string& path);

std::string iso8601_now();

/// Deterministic float formatting for CSV output (12 significant digits).
std::string fmt_double(double v);

// Tabular output: CSV with a "# schema=" header line, optional JSON mirror.
struct Table {
    std::string schema;                      // e.g. "zetamax.constants.v1"
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> comments;       // extra "# ..." lines

    void add_row(const std::vector<double>& values);
    void write_csv(const std::string& path) const;
    void write_json(const std::string& path) const;
};

// key = value configuration file; '#' starts a comment.
struct Config {
    std::map<std::string, std::string> values;
    static Config load(const std::string& path);
    std::optional<std::string> get(const std::string& key) const;
};

/// Worker-count resolution: CLI flag > ZETA_WORKERS env > config file > 0
/// (0 lets the library pick hardware concurrency).
int resolve_worker_count(int cli_value, const Config& config);

} // namespace zetamax
