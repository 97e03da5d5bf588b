#include "gausslind/evolution.hpp"

#include <cmath>
#include <stdexcept>

#include "gausslind/errors.hpp"
#include "gausslind/quadrature.hpp"

namespace gausslind {

namespace {

void require_time(double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
}

void require_bath(const BathParams& bath) {
    if (!(bath.k >= 0.0)) throw std::invalid_argument("bath.k must be >= 0");
    if (!(bath.n_bar >= 0.0))
        throw std::invalid_argument("bath.n_bar must be >= 0");
}

// (1 - e^{-a t})/a, continuous through a = 0.
double decay_integral(double a, double t) {
    if (std::abs(a) < 1e-14) return t;
    return -std::expm1(-a * t) / a;
}

TrajectorySample make_sample(double t, const GaussianState& state) {
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

Mat2 m_matrix(const FrequencyProfile& profile, const BathParams& bath,
              double t, double tol) {
    require_time(t);
    require_bath(bath);
    if (t == 0.0 || bath.k == 0.0) return Mat2::Zero();

    const double k = bath.k;
    const double strength = k * (2.0 * bath.n_bar + 1.0);
    const double w0 = reference_omega(profile);
    const double max_panel = std::min(0.1, 1.0 / (2.0 * k + 2.0 * w0));

    auto integrand = [&](double tp) -> Eigen::Matrix<double, 3, 1> {
        const Mat2 b = two_time_propagator(profile, t, tp, tol).matrix();
        const Mat2 g = std::exp(2.0 * k * (tp - t)) * (b.transpose() * b);
        return {g(0, 0), g(0, 1), g(1, 1)};
    };
    const Eigen::Matrix<double, 3, 1> integral =
        strength * integrate_adaptive<3>(integrand, 0.0, t, tol, max_panel);

    Mat2 m;
    m << integral[0], integral[1], integral[1], integral[2];
    return m;
}

Mat2 m_matrix_iho_closed(double omega0, const BathParams& bath, double t) {
    require_time(t);
    require_bath(bath);
    if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be > 0");
    if (t == 0.0 || bath.k == 0.0) return Mat2::Zero();

    const double k = bath.k;
    const double e = decay_integral(2.0 * k, t);
    const double p = decay_integral(2.0 * k + 2.0 * omega0, t);
    const double q = decay_integral(2.0 * k - 2.0 * omega0, t);
    const double a = 2.0 * k * (bath.n_bar + 0.5);
    const double w2 = omega0 * omega0;

    Mat2 m;
    m(0, 0) = a * ((1.0 - w2) * 0.5 * e + (1.0 + w2) * 0.25 * (p + q));
    m(1, 1) = a * ((1.0 - 1.0 / w2) * 0.5 * e +
                   (1.0 + 1.0 / w2) * 0.25 * (p + q));
    m(0, 1) = a * (omega0 + 1.0 / omega0) * 0.25 * (p - q);
    m(1, 0) = m(0, 1);
    return m;
}

GaussianState evolve(const GaussianState& state0,
                     const FrequencyProfile& profile, const BathParams& bath,
                     double t, const Tolerances& tol) {
    require_time(t);
    require_bath(bath);

    const Mat2 r = propagator_at(profile, t, tol.ode).matrix();
    Mat2 m;
    if (std::holds_alternative<InvertedProfile>(profile))
        m = m_matrix_iho_closed(std::get<InvertedProfile>(profile).omega0,
                                bath, t);
    else
        m = m_matrix(profile, bath, t, tol.quad);

    // Noise enters the covariance as Omega^T M Omega with Omega = [[0,1],[-1,0]].
    Mat2 noise;
    noise << m(1, 1), -m(0, 1), -m(0, 1), m(0, 0);

    const double damp = std::exp(-bath.k * t);
    const Mat2 sigma0 = state0.covariance();
    const Mat2 sigma = damp * damp * (r * sigma0 * r.transpose()) + noise;
    const Vec2 mean = damp * (r * state0.mean());

    GaussianState out;
    out.mean_q = mean[0];
    out.mean_p = mean[1];
    out.sigma_qq = sigma(0, 0);
    out.sigma_pp = sigma(1, 1);
    out.sigma_qp = 0.5 * (sigma(0, 1) + sigma(1, 0));
    return out;
}

std::complex<double> chi_at(const GaussianState& state, double xi_p,
                            double xi_q) {
    const double phase = xi_p * state.mean_q - xi_q * state.mean_p;
    const double quad = xi_p * xi_p * state.sigma_qq -
                        2.0 * xi_p * xi_q * state.sigma_qp +
                        xi_q * xi_q * state.sigma_pp;
    return std::exp(std::complex<double>(-0.5 * quad, phase));
}

Trajectory trajectory(const GaussianParams& params0,
                      const FrequencyProfile& profile, const BathParams& bath,
                      double t_max, int n_steps, const Tolerances& tol) {
    if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");
    if (n_steps < 2) throw std::invalid_argument("n_steps must be >= 2");

    const GaussianState state0 = params_to_state(params0);
    Trajectory out;
    out.reserve(static_cast<size_t>(n_steps));
    for (int i = 0; i < n_steps; ++i) {
        const double t = t_max * i / (n_steps - 1);
        out.push_back(make_sample(t, evolve(state0, profile, bath, t, tol)));
    }
    return out;
}

double d_asymptote_iho(double omega0, const BathParams& bath) {
    if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be > 0");
    require_bath(bath);
    if (!(bath.k > omega0))
        throw std::domain_error(
            "no determinant asymptote: requires k > omega0 (entropy grows "
            "without bound otherwise)");

    // t -> infinity limit of evolve(): the propagated initial covariance
    // decays and only the noise block survives.
    const double k = bath.k;
    const double e = 1.0 / (2.0 * k);
    const double p = 1.0 / (2.0 * k + 2.0 * omega0);
    const double q = 1.0 / (2.0 * k - 2.0 * omega0);
    const double a = 2.0 * k * (bath.n_bar + 0.5);
    const double w2 = omega0 * omega0;

    const double m11 = a * ((1.0 - w2) * 0.5 * e + (1.0 + w2) * 0.25 * (p + q));
    const double m22 = a * ((1.0 - 1.0 / w2) * 0.5 * e +
                            (1.0 + 1.0 / w2) * 0.25 * (p + q));
    const double m12 = a * (omega0 + 1.0 / omega0) * 0.25 * (p - q);
    return m11 * m22 - m12 * m12;
}

}  // namespace gausslind
