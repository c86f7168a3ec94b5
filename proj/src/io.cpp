#include "zetamax/io.hpp"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zetamax {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return fnv1a_hex(ss.str());
}

std::string iso8601_now() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_manifest(const std::string& output_path, const RunManifest& m) {
    nlohmann::ordered_json j;
    j["command_line"] = m.command_line;
    j["seed"] = m.seed;
    j["code_version"] = m.code_version;
    j["timestamp"] = m.timestamp;
    j["input_digest"] = m.input_digest;
    std::ofstream out(output_path + ".manifest.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest for " + output_path);
    out << j.dump(2) << '\n';
}

void Table::add_row(const std::vector<double>& values) {
    std::vector<std::string> row;
    row.reserve(values.size());
    for (double v : values) row.push_back(fmt_double(v));
    rows.push_back(std::move(row));
}

void Table::write_csv(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "# schema=" << schema << '\n';
    for (const auto& c : comments) out << "# " << c << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i)
        out << columns[i] << (i + 1 < columns.size() ? "," : "");
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "");
        out << '\n';
    }
}

void Table::write_json(const std::string& path) const {
    nlohmann::ordered_json j;
    j["schema"] = schema;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < columns.size() && i < row.size(); ++i)
            obj[columns[i]] = row[i];
        arr.push_back(obj);
    }
    j["rows"] = arr;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

Config Config::load(const std::string& path) {
    Config cfg;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{}
                                          : s.substr(b, e - b + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (!key.empty()) cfg.values[key] = val;
    }
    return cfg;
}

std::optional<std::string> Config::get(const std::string& key) const {
    auto it = values.find(key);
    if (it == values.end()) return std::nullopt;
    return it->second;
}

int resolve_worker_count(int cli_value, const Config& config) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("ZETA_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    if (auto v = config.get("workers")) {
        int n = std::atoi(v->c_str());
        if (n > 0) return n;
    }
    return 0;
}

} // namespace zetamax
