#pragma once

#include <complex>
#include <vector>

#include "gausslind/frequency_profile.hpp"
#include "gausslind/gaussian_state.hpp"
#include "gausslind/propagator.hpp"

namespace gausslind {

// Thermal bath: damping rate k >= 0 and mean occupation n_bar >= 0.
struct BathParams {
    double k = 0.0;
    double n_bar = 0.0;
};

struct Tolerances {
    double ode = 1e-10;
    double quad = 1e-10;
};

// Accumulated noise matrix of the dissipative propagation in chord
// variables:
//   M(t) = k (2 n_bar + 1) \int_0^t e^{2k(t'-t)} R(t->t')^T R(t->t') dt'.
// Zero when k = 0 or t = 0. Requires t >= 0.
Mat2 m_matrix(const FrequencyProfile& profile, const BathParams& bath,
              double t, double tol);

// Closed form of m_matrix for the inverted profile, exact in the damping
// rate including k = omega0.
Mat2 m_matrix_iho_closed(double omega0, const BathParams& bath, double t);

// Propagates a Gaussian state to time t >= 0:
//   sigma(t) = e^{-2kt} R sigma(0) R^T + Omega^T M Omega,
//   mean(t) = e^{-kt} R mean(0),
// with R = R(0 -> t) and Omega the symplectic unit.
GaussianState evolve(const GaussianState& state0,
                     const FrequencyProfile& profile, const BathParams& bath,
                     double t, const Tolerances& tol = {});

// Characteristic function chi(xi) = tr[rho e^{i(xi_p q - xi_q p)}] of a
// Gaussian state at chord coordinates (xi_p, xi_q).
std::complex<double> chi_at(const GaussianState& state, double xi_p,
                            double xi_q);

struct TrajectorySample {
    double t = 0.0;
    GaussianState state;
    double det = 0.0;
    double entropy = 0.0;
    double r = 0.0;
    double nu = 0.0;
};

using Trajectory = std::vector<TrajectorySample>;

// Evolution sampled on the uniform grid t_i = i * t_max / (n_steps - 1),
// i = 0 .. n_steps-1. Requires t_max > 0 and n_steps >= 2.
Trajectory trajectory(const GaussianParams& params0,
                      const FrequencyProfile& profile, const BathParams& bath,
                      double t_max, int n_steps, const Tolerances& tol = {});

// Late-time determinant limit for the inverted profile. Exists only for
// k > omega0; otherwise throws std::domain_error.
double d_asymptote_iho(double omega0, const BathParams& bath);

}  // namespace gausslind
