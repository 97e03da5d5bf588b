#include "gausslind/moment_oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "gausslind/errors.hpp"
#include "gausslind/ode.hpp"

namespace gausslind {

namespace {

TrajectorySample sample_from_vec(double t,
                                 const Eigen::Matrix<double, 5, 1>& y) {
    GaussianState state;
    state.mean_q = y[0];
    state.mean_p = y[1];
    state.sigma_qq = y[2];
    state.sigma_pp = y[3];
    state.sigma_qp = y[4];

    TrajectorySample sample;
    sample.t = t;
    sample.state = state;
    sample.det = covariance_det(state);
    sample.entropy = von_neumann_entropy(sample.det);
    const GaussianParams params = state_to_params(state);
    sample.r = params.r;
    sample.nu = params.nu;
    return sample;
}

}  // namespace

Mat2 MomentOdeSystem::drift(const FrequencyProfile& profile,
                            const BathParams& bath, double t) const {
    Mat2 a;
    a << -bath.k, 1.0, -omega_squared(profile, t), -bath.k;
    return a;
}

Mat2 MomentOdeSystem::diffusion(const BathParams& bath) const {
    return bath.k * (2.0 * bath.n_bar + 1.0) * Mat2::Identity();
}

Trajectory oracle_evolve(const GaussianState& state0,
                         const FrequencyProfile& profile,
                         const BathParams& bath,
                         const std::vector<double>& t_grid, double tol) {
    if (t_grid.empty()) throw std::invalid_argument("t_grid must be nonempty");
    for (size_t i = 0; i < t_grid.size(); ++i) {
        if (!(t_grid[i] >= 0.0))
            throw std::invalid_argument("t_grid entries must be >= 0");
        if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
            throw std::invalid_argument("t_grid must be strictly increasing");
    }

    using Vec5 = Eigen::Matrix<double, 5, 1>;
    const double k = bath.k;
    const double dc = k * (2.0 * bath.n_bar + 1.0);
    auto rhs = [&](double t, const Vec5& y) {
        const double w2 = omega_squared(profile, t);
        Vec5 dy;
        dy[0] = -k * y[0] + y[1];
        dy[1] = -w2 * y[0] - k * y[1];
        dy[2] = -2.0 * k * y[2] + 2.0 * y[4] + dc;
        dy[3] = -2.0 * k * y[3] - 2.0 * w2 * y[4] + dc;
        dy[4] = y[3] - w2 * y[2] - 2.0 * k * y[4];
        return dy;
    };

    Vec5 y;
    y << state0.mean_q, state0.mean_p, state0.sigma_qq, state0.sigma_pp,
        state0.sigma_qp;

    Trajectory out;
    out.reserve(t_grid.size());
    double t = 0.0;
    for (double t_next : t_grid) {
        y = integrate_ode<5>(rhs, y, t, t_next, tol);
        t = t_next;
        out.push_back(sample_from_vec(t, y));
    }
    return out;
}

}  // namespace gausslind
