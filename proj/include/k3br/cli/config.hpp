#pragma once

// Run configuration. The file format is one "key = value" per line; '#'
// starts a comment. Command-line flags override file values.
//
//   seed       run seed (default 1)
//   precision  p-adic working precision k (default 32)
//   params     family parameters a,b,c,d,e (default 1,1,1,1,1)
//   claims     glob over claim ids (default *)
//   samples    size of randomized sweeps (default 100)
//   threads    worker threads, 0 = all cores (default 0)
//   class_a    override of the class's first argument, factored text
//   class_b    override of the class's second argument, factored text
//   certs      certificate file replacing the built-in ones, relative to
//              the config file's directory

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace k3br::cli {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    std::uint64_t seed = 1;
    unsigned precision = 32;
    std::string params = "1,1,1,1,1";
    std::string claims = "*";
    unsigned samples = 100;
    unsigned threads = 0;
    std::optional<std::string> class_a, class_b;
    std::optional<std::string> certs;

    /// Applies one key/value; throws UsageError on unknown keys or bad values.
    void set(const std::string& key, const std::string& value);
};

Config parse_config(const std::string& text);
Config load_config(const std::string& path);

/// Shell-style glob with '*' and '?'.
bool glob_match(const std::string& pattern, const std::string& text);

}  // namespace k3br::cli
