#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>

#include "gausslind/errors.hpp"

namespace gausslind::cli {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const KeyValue& kv, const std::string& message) {
    std::string where = kv.line > 0
                            ? "line " + std::to_string(kv.line) + ", " + kv.key
                            : "--" + kv.key;
    throw ConfigError(where + ": " + message);
}

double parse_double(const KeyValue& kv) {
    const std::string v = trim(kv.value);
    if (v.empty()) fail(kv, "empty value");
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size()) fail(kv, "not a number: '" + kv.value + "'");
    if (!std::isfinite(d)) fail(kv, "value must be finite");
    return d;
}

int parse_int(const KeyValue& kv) {
    const double d = parse_double(kv);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d) fail(kv, "not an integer: '" + kv.value + "'");
    return i;
}

// Tabulated profile file: `t omega^2` per line, same comment rules as the
// config format.
TabulatedProfile load_table(const KeyValue& kv) {
    std::ifstream in(trim(kv.value));
    if (!in) fail(kv, "cannot open table file '" + kv.value + "'");
    std::vector<std::pair<double, double>> samples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        double t = 0.0, w2 = 0.0;
        char extra = 0;
        if (std::sscanf(line.c_str(), "%lf %lf %c", &t, &w2, &extra) != 2)
            fail(kv, "table line " + std::to_string(lineno) +
                         ": expected 't omega^2'");
        samples.emplace_back(t, w2);
    }
    try {
        return TabulatedProfile(std::move(samples));
    } catch (const std::invalid_argument& e) {
        fail(kv, e.what());
    }
}

}  // namespace

const std::vector<std::string>& config_keys() {
    static const std::vector<std::string> keys = {
        "profile.type",   "profile.omega0", "profile.gamma",
        "profile.table",  "bath.k",         "bath.n_bar",
        "initial.alpha_re", "initial.alpha_im", "initial.r",
        "initial.phi",    "initial.nu",     "grid.t_max",
        "grid.n_steps",   "tolerances.ode", "tolerances.quad",
        "engine",
    };
    return keys;
}

std::vector<KeyValue> parse_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");

    std::vector<KeyValue> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        KeyValue kv{trim(line.substr(0, eq)), trim(line.substr(eq + 1)), lineno};
        if (kv.key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        out.push_back(std::move(kv));
    }
    return out;
}

RunConfig build_config(const std::vector<KeyValue>& file_values,
                       const std::vector<KeyValue>& overrides) {
    std::map<std::string, KeyValue> merged;
    for (const auto& kv : file_values) {
        const auto& keys = config_keys();
        if (std::find(keys.begin(), keys.end(), kv.key) == keys.end())
            fail(kv, "unknown key");
        merged[kv.key] = kv;
    }
    for (const auto& kv : overrides) {
        const auto& keys = config_keys();
        if (std::find(keys.begin(), keys.end(), kv.key) == keys.end())
            fail(kv, "unknown key");
        merged[kv.key] = kv;
    }

    auto get = [&](const std::string& key) -> std::optional<KeyValue> {
        auto it = merged.find(key);
        if (it == merged.end()) return std::nullopt;
        return it->second;
    };

    RunConfig config;

    const std::string type =
        get("profile.type") ? trim(get("profile.type")->value) : "constant";
    const double omega0 =
        get("profile.omega0") ? parse_double(*get("profile.omega0")) : 1.0;
    if (auto kv = get("profile.omega0"); kv && !(omega0 > 0.0))
        fail(*kv, "omega0 must be > 0");

    if (type == "constant") {
        config.profile = ConstantProfile{omega0};
    } else if (type == "inverted") {
        config.profile = InvertedProfile{omega0};
    } else if (type == "sqrt_ramp") {
        const double gamma =
            get("profile.gamma") ? parse_double(*get("profile.gamma")) : 1.0;
        config.profile = SqrtRampProfile{omega0, gamma};
    } else if (type == "tabulated") {
        auto kv = get("profile.table");
        if (!kv)
            throw ConfigError(
                "profile.table: required for profile.type = tabulated");
        config.profile = load_table(*kv);
    } else {
        fail(*get("profile.type"),
             "expected constant|inverted|sqrt_ramp|tabulated");
    }
    if (type != "sqrt_ramp" && get("profile.gamma"))
        fail(*get("profile.gamma"), "only valid for profile.type = sqrt_ramp");
    if (type != "tabulated" && get("profile.table"))
        fail(*get("profile.table"), "only valid for profile.type = tabulated");

    if (auto kv = get("bath.k")) {
        config.bath.k = parse_double(*kv);
        if (config.bath.k < 0.0) fail(*kv, "must be >= 0");
    }
    if (auto kv = get("bath.n_bar")) {
        config.bath.n_bar = parse_double(*kv);
        if (config.bath.n_bar < 0.0) fail(*kv, "must be >= 0");
    }

    double alpha_re = 0.0, alpha_im = 0.0;
    if (auto kv = get("initial.alpha_re")) alpha_re = parse_double(*kv);
    if (auto kv = get("initial.alpha_im")) alpha_im = parse_double(*kv);
    config.initial.alpha = {alpha_re, alpha_im};
    if (auto kv = get("initial.r")) {
        config.initial.r = parse_double(*kv);
        if (config.initial.r < 0.0) fail(*kv, "must be >= 0");
    }
    if (auto kv = get("initial.phi")) config.initial.phi = parse_double(*kv);
    if (auto kv = get("initial.nu")) {
        config.initial.nu = parse_double(*kv);
        if (config.initial.nu < 0.0) fail(*kv, "must be >= 0");
    }

    if (auto kv = get("grid.t_max")) {
        config.t_max = parse_double(*kv);
        if (!(config.t_max > 0.0)) fail(*kv, "must be > 0");
    }
    if (auto kv = get("grid.n_steps")) {
        config.n_steps = parse_int(*kv);
        if (config.n_steps < 2) fail(*kv, "must be >= 2");
    }
    if (auto kv = get("tolerances.ode")) {
        config.tol.ode = parse_double(*kv);
        if (!(config.tol.ode > 0.0)) fail(*kv, "must be > 0");
    }
    if (auto kv = get("tolerances.quad")) {
        config.tol.quad = parse_double(*kv);
        if (!(config.tol.quad > 0.0)) fail(*kv, "must be > 0");
    }
    if (auto kv = get("engine")) {
        const std::string v = trim(kv->value);
        if (v == "chord")
            config.engine = Engine::chord;
        else if (v == "oracle")
            config.engine = Engine::oracle;
        else if (v == "both")
            config.engine = Engine::both;
        else
            fail(*kv, "expected chord|oracle|both");
    }
    return config;
}

}  // namespace gausslind::cli
