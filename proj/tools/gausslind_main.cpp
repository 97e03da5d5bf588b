#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "../src/cli/commands.hpp"
#include "../src/cli/run_config.hpp"
#include "gausslind/errors.hpp"

namespace {

using gausslind::cli::KeyValue;

// Mirrors every config key as a --dotted.flag so the command line can
// override file values.
void add_override_options(CLI::App* sub,
                          std::map<std::string, std::string>& storage) {
    for (const auto& key : gausslind::cli::config_keys()) {
        storage[key];  // stable slot before binding
        sub->add_option("--" + key, storage[key],
                        "override config key " + key);
    }
}

std::vector<KeyValue> collect_overrides(
    const CLI::App* sub, const std::map<std::string, std::string>& storage) {
    std::vector<KeyValue> overrides;
    for (const auto& [key, value] : storage)
        if (sub->count("--" + key) > 0) overrides.push_back({key, value, 0});
    return overrides;
}

gausslind::cli::RunConfig load_config(const std::string& config_path,
                                      const std::vector<KeyValue>& overrides) {
    std::vector<KeyValue> file_values;
    if (!config_path.empty())
        file_values = gausslind::cli::parse_config_file(config_path);
    return gausslind::cli::build_config(file_values, overrides);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gaussian states under quadratic Hamiltonians with a "
                 "thermal dissipative bath"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path = "-";
    std::string out_dir = ".";
    std::vector<double> k_values;
    int jobs = 1;
    int figure_id = 0;
    std::map<std::string, std::string> evolve_overrides;
    std::map<std::string, std::string> sweep_overrides;

    CLI::App* evolve = app.add_subcommand(
        "evolve", "Propagate one configuration and write the trajectory CSV");
    evolve->add_option("--config", config_path, "config file");
    evolve->add_option("--out", out_path, "output CSV ('-' for stdout)");
    add_override_options(evolve, evolve_overrides);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Run one trajectory per damping rate and summarize");
    sweep->add_option("--config", config_path, "config file");
    sweep->add_option("--k", k_values, "damping rates")
        ->required()
        ->delimiter(',');
    sweep->add_option("--out-dir", out_dir, "output directory");
    sweep->add_option("--jobs", jobs, "worker threads")
        ->envname("GAUSSLIND_JOBS");
    add_override_options(sweep, sweep_overrides);

    CLI::App* figures = app.add_subcommand(
        "figures", "Write the reference figure datasets (ids 1, 2, 4, 5)");
    figures->add_option("id", figure_id, "figure id")->required();
    figures->add_option("--out-dir", out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (evolve->parsed()) {
            const auto config = load_config(
                config_path, collect_overrides(evolve, evolve_overrides));
            if (out_path == "-") {
                gausslind::cli::cmd_evolve(config, std::cout, std::cerr);
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out)
                    throw gausslind::ConfigError("cannot open output file '" +
                                                 out_path + "'");
                gausslind::cli::cmd_evolve(config, out, std::cerr);
            }
        } else if (sweep->parsed()) {
            const auto config = load_config(
                config_path, collect_overrides(sweep, sweep_overrides));
            gausslind::cli::cmd_sweep(config, k_values, out_dir, jobs);
        } else if (figures->parsed()) {
            gausslind::cli::cmd_figures(figure_id, out_dir);
        }
    } catch (const gausslind::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const gausslind::IntegrationError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const gausslind::QuadratureError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const gausslind::HeisenbergError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
