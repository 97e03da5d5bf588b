#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "csv.hpp"
#include "gausslind/errors.hpp"
#include "gausslind/moment_oracle.hpp"

namespace gausslind::cli {

namespace {

std::vector<double> uniform_grid(double t_max, int n_steps) {
    std::vector<double> grid(static_cast<size_t>(n_steps));
    for (int i = 0; i < n_steps; ++i)
        grid[static_cast<size_t>(i)] = t_max * i / (n_steps - 1);
    return grid;
}

Trajectory run_chord(const RunConfig& c) {
    return trajectory(c.initial, c.profile, c.bath, c.t_max, c.n_steps, c.tol);
}

Trajectory run_oracle(const RunConfig& c) {
    const GaussianState state0 = params_to_state(c.initial);
    return oracle_evolve(state0, c.profile, c.bath,
                         uniform_grid(c.t_max, c.n_steps), c.tol.ode);
}

double max_relative_covariance_deviation(const Trajectory& a,
                                         const Trajectory& b) {
    double worst = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const Mat2 da = a[i].state.covariance() - b[i].state.covariance();
        const double scale =
            b[i].state.covariance().cwiseAbs().maxCoeff();
        worst = std::max(worst, da.cwiseAbs().maxCoeff() / scale);
    }
    return worst;
}

std::string compact_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ConfigError("cannot open output file '" + path.string() + "'");
    return out;
}

void write_gnuplot_script(const std::filesystem::path& path, int figure_id,
                          const std::vector<double>& k_values,
                          const char* ylabel, int column) {
    std::ofstream out = open_output(path);
    out << "set datafile separator ','\n"
        << "set xlabel 't'\n"
        << "set ylabel '" << ylabel << "'\n"
        << "set key top left\n"
        << "plot ";
    for (size_t i = 0; i < k_values.size(); ++i) {
        const std::string file =
            "figure" + std::to_string(figure_id) + "_k" +
            compact_number(k_values[i]) + ".csv";
        if (i > 0) out << ", \\\n     ";
        out << "'" << file << "' using 1:" << column
            << " with lines title 'k = " << compact_number(k_values[i]) << "'";
    }
    out << '\n';
}

}  // namespace

double entropy_slope(const Trajectory& traj, double fraction) {
    if (traj.size() < 2)
        throw std::invalid_argument("entropy slope needs >= 2 samples");
    size_t begin = static_cast<size_t>(
        std::floor((1.0 - fraction) * static_cast<double>(traj.size())));
    if (begin > traj.size() - 2) begin = traj.size() - 2;

    double st = 0.0, ss = 0.0, stt = 0.0, sts = 0.0;
    const double n = static_cast<double>(traj.size() - begin);
    for (size_t i = begin; i < traj.size(); ++i) {
        st += traj[i].t;
        ss += traj[i].entropy;
        stt += traj[i].t * traj[i].t;
        sts += traj[i].t * traj[i].entropy;
    }
    return (n * sts - st * ss) / (n * stt - st * st);
}

void cmd_evolve(const RunConfig& config, std::ostream& out,
                std::ostream& diag) {
    switch (config.engine) {
        case Engine::chord:
            write_trajectory_csv(out, run_chord(config));
            break;
        case Engine::oracle:
            write_trajectory_csv(out, run_oracle(config));
            break;
        case Engine::both: {
            const Trajectory chord = run_chord(config);
            const Trajectory oracle = run_oracle(config);
            write_paired_csv(out, chord, oracle);
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.3e",
                          max_relative_covariance_deviation(chord, oracle));
            diag << "# max relative covariance deviation (chord vs oracle): "
                 << buf << '\n';
            break;
        }
    }
}

std::vector<SweepRow> cmd_sweep(const RunConfig& config,
                                const std::vector<double>& k_values,
                                const std::filesystem::path& out_dir,
                                int jobs) {
    if (k_values.empty()) throw ConfigError("sweep needs at least one k");
    for (double k : k_values)
        if (!(k >= 0.0)) throw ConfigError("sweep k values must be >= 0");
    std::filesystem::create_directories(out_dir);

    std::vector<SweepRow> rows(k_values.size());
    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < k_values.size();
             i = next.fetch_add(1)) {
            try {
                RunConfig c = config;
                c.bath.k = k_values[i];
                const Trajectory traj =
                    c.engine == Engine::oracle ? run_oracle(c) : run_chord(c);
                std::ofstream out = open_output(
                    out_dir / ("sweep_k" + compact_number(k_values[i]) + ".csv"));
                write_trajectory_csv(out, traj);
                rows[i] = {k_values[i], traj.back().det, traj.back().entropy,
                           entropy_slope(traj)};
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    const size_t n_threads = std::min<size_t>(
        k_values.size(), static_cast<size_t>(std::max(1, jobs)));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (size_t i = 0; i < n_threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::ofstream summary = open_output(out_dir / "summary.csv");
    summary << "k,final_D,final_S,entropy_slope\n";
    for (const auto& row : rows)
        summary << format_sci(row.k) << ',' << format_sci(row.final_det) << ','
                << format_sci(row.final_entropy) << ','
                << format_sci(row.entropy_slope) << '\n';
    return rows;
}

void cmd_figures(int figure_id, const std::filesystem::path& out_dir) {
    RunConfig base;
    base.t_max = 10.0;
    base.n_steps = 201;
    const char* ylabel = nullptr;
    int column = 0;

    switch (figure_id) {
        case 1:
        case 2:
            base.profile = InvertedProfile{1.0};
            base.initial = GaussianParams{{0.0, 0.0}, 1.0, 0.0, 0.0};
            ylabel = (figure_id == 1) ? "D(t)" : "S(t)";
            column = (figure_id == 1) ? 2 : 3;
            break;
        case 4:
            base.profile = SqrtRampProfile{1.0, 1.0};
            base.initial = GaussianParams{};
            ylabel = "S(t)";
            column = 3;
            break;
        case 5:
            base.profile = SqrtRampProfile{1.0, 1.0};
            base.initial = GaussianParams{{0.0, 0.0}, 0.0, 0.0, 3.0};
            ylabel = "S(t)";
            column = 3;
            break;
        default:
            throw ConfigError("unknown figure id " + std::to_string(figure_id) +
                              " (available: 1, 2, 4, 5)");
    }

    std::filesystem::create_directories(out_dir);
    const std::vector<double> k_values = {0.5, 1.0, 1.5};
    for (double k : k_values) {
        RunConfig c = base;
        c.bath.k = k;
        std::ofstream out = open_output(
            out_dir / ("figure" + std::to_string(figure_id) + "_k" +
                       compact_number(k) + ".csv"));
        write_trajectory_csv(out, run_chord(c));
    }
    write_gnuplot_script(
        out_dir / ("figure" + std::to_string(figure_id) + ".gp"), figure_id,
        k_values, ylabel, column);
}

}  // namespace gausslind::cli
