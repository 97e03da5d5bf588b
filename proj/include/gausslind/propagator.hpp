#pragma once

#include "gausslind/frequency_profile.hpp"
#include "gausslind/gaussian_state.hpp"

namespace gausslind {

// Fundamental solution of the classical equation x'' + omega^2(t) x = 0 in
// phase-space order (q, p):
//   R = [[u, v], [u', v']],  u(0) = v'(0) = 1,  u'(0) = v(0) = 0.
// det R = u v' - v u' = 1 (Wronskian).
struct PropagatorMatrix {
    double u = 1.0;
    double v = 0.0;
    double du = 0.0;
    double dv = 1.0;

    Mat2 matrix() const {
        Mat2 r;
        r << u, v, du, dv;
        return r;
    }

    double wronskian() const { return u * dv - v * du; }
};

inline PropagatorMatrix propagator_from_matrix(const Mat2& r) {
    return PropagatorMatrix{r(0, 0), r(0, 1), r(1, 0), r(1, 1)};
}

// R(0 -> t) by adaptive integration of both initial-value problems.
PropagatorMatrix fundamental_pair(const FrequencyProfile& profile, double t,
                                  double tol);

// Closed forms. Each validates omega0 > 0.
PropagatorMatrix constant_propagator_closed(double omega0, double t);
PropagatorMatrix iho_propagator_closed(double omega0, double t);
// Airy-function solution for omega^2(t) = omega0^2 (1 + gamma t); rejects
// gamma = 0. Throws std::domain_error when the Airy argument leaves the
// validated range.
PropagatorMatrix ramp_propagator_closed(double omega0, double gamma, double t);

// R(0 -> t) using the closed form when the profile admits one, the
// integrator otherwise.
PropagatorMatrix propagator_at(const FrequencyProfile& profile, double t,
                               double tol);

// R(t_from -> t_to) = R(0 -> t_to) R(0 -> t_from)^{-1}. Autonomous profiles
// reduce to R(0 -> t_to - t_from) and the ramp has a two-point Airy form;
// the generic path integrates from t_from directly, so no profile pays the
// cancellation of the explicit product above.
PropagatorMatrix two_time_propagator(const FrequencyProfile& profile,
                                     double t_from, double t_to, double tol);

}  // namespace gausslind
