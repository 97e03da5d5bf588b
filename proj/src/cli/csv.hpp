#pragma once

#include <ostream>
#include <string>

#include "gausslind/evolution.hpp"

namespace gausslind::cli {

// Scientific notation with 12 significant digits, e.g. 2.50000000000e-01.
// Negative zero is normalized to zero so equal values format identically.
std::string format_sci(double v);

// Header: t,D,S,sigma_qq,sigma_qp,sigma_pp,r,nu,mean_q,mean_p
void write_trajectory_csv(std::ostream& out, const Trajectory& traj);

// Same schema with the second engine's columns appended under an _oracle
// suffix (t emitted once).
void write_paired_csv(std::ostream& out, const Trajectory& chord,
                      const Trajectory& oracle);

}  // namespace gausslind::cli
