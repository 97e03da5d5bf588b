#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gausslind/evolution.hpp"

namespace gausslind::cli {

enum class Engine { chord, oracle, both };

struct RunConfig {
    FrequencyProfile profile = ConstantProfile{1.0};
    BathParams bath{};
    GaussianParams initial{};
    double t_max = 10.0;
    int n_steps = 201;
    Tolerances tol{};
    Engine engine = Engine::chord;
};

// One `key = value` assignment and the line it came from (0 for flags).
struct KeyValue {
    std::string key;
    std::string value;
    int line = 0;
};

// Parses a UTF-8 config file of `key = value` lines; `#` starts a comment,
// blank lines are ignored. Throws ConfigError with the offending line
// number.
std::vector<KeyValue> parse_config_file(const std::filesystem::path& path);

// Builds a validated RunConfig from file assignments plus flag overrides
// (applied last, so flags win on duplicate keys). Throws ConfigError naming
// the bad field.
RunConfig build_config(const std::vector<KeyValue>& file_values,
                       const std::vector<KeyValue>& overrides);

// Dotted keys understood by build_config, in display order.
const std::vector<std::string>& config_keys();

}  // namespace gausslind::cli
