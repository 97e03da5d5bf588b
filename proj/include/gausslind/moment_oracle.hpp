#pragma once

#include <vector>

#include "gausslind/evolution.hpp"

namespace gausslind {

// Direct moment-equation formulation of the same open dynamics, used as an
// independent cross-check of the chord-function propagation:
//   d mean / dt = A(t) mean,
//   d sigma / dt = A sigma + sigma A^T + Dc,
//   A = [[-k, 1], [-omega^2(t), -k]],  Dc = k (2 n_bar + 1) I.
struct MomentOdeSystem {
    Mat2 drift(const FrequencyProfile& profile, const BathParams& bath,
               double t) const;
    Mat2 diffusion(const BathParams& bath) const;
};

// Integrates the moment equations through the strictly increasing grid
// t_grid (entries >= 0; integration starts at t = 0) and reports the same
// per-sample quantities as trajectory().
Trajectory oracle_evolve(const GaussianState& state0,
                         const FrequencyProfile& profile,
                         const BathParams& bath,
                         const std::vector<double>& t_grid, double tol);

}  // namespace gausslind
