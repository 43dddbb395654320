#include "k3br/cli/config.hpp"

#include <fnmatch.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace k3br::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::uint64_t parse_unsigned(const std::string& key, const std::string& value, std::uint64_t max) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        if (!value.empty() && value.front() == '-') throw std::invalid_argument("negative");
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        throw UsageError("config key '" + key + "' expects a non-negative integer, got '" + value + "'");
    }
    if (used != value.size() || v > max)
        throw UsageError("config key '" + key + "' expects a non-negative integer, got '" + value + "'");
    return v;
}

}  // namespace

void Config::set(const std::string& key, const std::string& value) {
    if (key == "seed")
        seed = parse_unsigned(key, value, std::numeric_limits<std::uint64_t>::max());
    else if (key == "precision") {
        precision = static_cast<unsigned>(parse_unsigned(key, value, 256));
        if (precision < 4) throw UsageError("precision must be at least 4");
    } else if (key == "params")
        params = value;
    else if (key == "claims")
        claims = value;
    else if (key == "samples")
        samples = static_cast<unsigned>(parse_unsigned(key, value, 100000));
    else if (key == "threads")
        threads = static_cast<unsigned>(parse_unsigned(key, value, 1024));
    else if (key == "class_a")
        class_a = value;
    else if (key == "class_b")
        class_b = value;
    else if (key == "certs")
        certs = value;
    else
        throw UsageError("unknown config key '" + key + "'");
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
        try {
            cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const UsageError& e) {
            throw UsageError("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    Config cfg = parse_config(os.str());
    // A relative certificate path is taken relative to the config file.
    if (cfg.certs && std::filesystem::path(*cfg.certs).is_relative())
        cfg.certs = (std::filesystem::path(path).parent_path() / *cfg.certs).string();
    return cfg;
}

bool glob_match(const std::string& pattern, const std::string& text) {
    return fnmatch(pattern.c_str(), text.c_str(), 0) == 0;
}

}  // namespace k3br::cli
