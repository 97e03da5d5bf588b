#include "csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace gausslind::cli {

namespace {

constexpr char kHeader[] = "t,D,S,sigma_qq,sigma_qp,sigma_pp,r,nu,mean_q,mean_p";

void write_fields(std::ostream& out, const TrajectorySample& s,
                  bool with_time) {
    if (with_time) out << format_sci(s.t) << ',';
    out << format_sci(s.det) << ',' << format_sci(s.entropy) << ','
        << format_sci(s.state.sigma_qq) << ',' << format_sci(s.state.sigma_qp)
        << ',' << format_sci(s.state.sigma_pp) << ',' << format_sci(s.r) << ','
        << format_sci(s.nu) << ',' << format_sci(s.state.mean_q) << ','
        << format_sci(s.state.mean_p);
}

}  // namespace

std::string format_sci(double v) {
    if (v == 0.0) v = 0.0;  // collapse -0
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.11e", v);
    return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
    out << kHeader << '\n';
    for (const auto& s : traj) {
        write_fields(out, s, true);
        out << '\n';
    }
}

void write_paired_csv(std::ostream& out, const Trajectory& chord,
                      const Trajectory& oracle) {
    if (chord.size() != oracle.size())
        throw std::invalid_argument("paired trajectories differ in length");
    out << kHeader
        << ",D_oracle,S_oracle,sigma_qq_oracle,sigma_qp_oracle,"
           "sigma_pp_oracle,r_oracle,nu_oracle,mean_q_oracle,mean_p_oracle\n";
    for (size_t i = 0; i < chord.size(); ++i) {
        write_fields(out, chord[i], true);
        out << ',';
        write_fields(out, oracle[i], false);
        out << '\n';
    }
}

}  // namespace gausslind::cli
