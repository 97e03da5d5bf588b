#pragma once

#include <complex>

#include <Eigen/Dense>

namespace gausslind {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

// Absolute slack on det(sigma) below the uncertainty bound 1/4 that is
// attributed to roundoff and clamped instead of rejected.
inline constexpr double kHeisenbergSlack = 1e-9;

// Gaussian state in physical parameters: displacement alpha, squeezing
// magnitude r >= 0 and angle phi, thermal occupation nu >= 0.
struct GaussianParams {
    std::complex<double> alpha{0.0, 0.0};
    double r = 0.0;
    double phi = 0.0;
    double nu = 0.0;
};

// Gaussian state as first and second moments of (q, p). sigma_qp is the
// symmetrized cross covariance, so sigma is
//   [[sigma_qq, sigma_qp], [sigma_qp, sigma_pp]].
struct GaussianState {
    double mean_q = 0.0;
    double mean_p = 0.0;
    double sigma_qq = 0.5;
    double sigma_pp = 0.5;
    double sigma_qp = 0.0;

    Mat2 covariance() const {
        Mat2 s;
        s << sigma_qq, sigma_qp, sigma_qp, sigma_pp;
        return s;
    }

    Vec2 mean() const { return Vec2(mean_q, mean_p); }
};

// Maps an angle to (-pi, pi].
double wrap_angle(double phi);

// Builds the moment representation. Throws std::invalid_argument for r < 0,
// nu < 0, or non-finite fields.
GaussianState params_to_state(const GaussianParams& params);

// Recovers physical parameters from moments. phi is reported in (-pi, pi]
// and set to 0 when the state carries no squeezing. Throws HeisenbergError
// when det(sigma) < 1/4 - kHeisenbergSlack.
GaussianParams state_to_params(const GaussianState& state);

// Determinant of the covariance matrix.
double covariance_det(const GaussianState& state);

// sqrt(det(sigma)), the symplectic eigenvalue. Throws HeisenbergError when
// det(sigma) < 1/4 - kHeisenbergSlack.
double symplectic_eigenvalue(const GaussianState& state);

// Von Neumann entropy as a function of d = det(sigma). Values within
// kHeisenbergSlack below 1/4 are clamped to 1/4 (entropy 0); smaller values
// throw HeisenbergError.
double von_neumann_entropy(double d);

}  // namespace gausslind
