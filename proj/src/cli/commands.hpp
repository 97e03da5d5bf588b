#pragma once

#include <filesystem>
#include <ostream>
#include <vector>

#include "run_config.hpp"

namespace gausslind::cli {

// Runs the configured engine(s) over the configured grid and writes CSV to
// out. With engine = both, a paired CSV is written and the worst relative
// covariance deviation between the engines goes to diag as a comment line.
void cmd_evolve(const RunConfig& config, std::ostream& out,
                std::ostream& diag);

struct SweepRow {
    double k = 0.0;
    double final_det = 0.0;
    double final_entropy = 0.0;
    double entropy_slope = 0.0;
};

// One trajectory per damping rate (distributed over jobs worker threads),
// written to out_dir/sweep_k<k>.csv, plus out_dir/summary.csv.
std::vector<SweepRow> cmd_sweep(const RunConfig& config,
                                const std::vector<double>& k_values,
                                const std::filesystem::path& out_dir,
                                int jobs);

// Reference figure datasets (ids 1, 2, 4, 5): three damping rates per
// figure, one CSV each, plus a gnuplot script. Unknown ids throw
// ConfigError.
void cmd_figures(int figure_id, const std::filesystem::path& out_dir);

// Least-squares slope of entropy vs time over the trailing fraction of the
// trajectory.
double entropy_slope(const Trajectory& traj, double fraction = 0.25);

}  // namespace gausslind::cli
