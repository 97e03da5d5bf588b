#include "gausslind/gaussian_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gausslind/errors.hpp"

namespace gausslind {

namespace {

constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be finite");
}

}  // namespace

double wrap_angle(double phi) {
    phi = std::fmod(phi, 2.0 * kPi);
    if (phi <= -kPi)
        phi += 2.0 * kPi;
    else if (phi > kPi)
        phi -= 2.0 * kPi;
    return phi;
}

GaussianState params_to_state(const GaussianParams& params) {
    require_finite(params.alpha.real(), "alpha.re");
    require_finite(params.alpha.imag(), "alpha.im");
    require_finite(params.r, "r");
    require_finite(params.phi, "phi");
    require_finite(params.nu, "nu");
    if (params.r < 0.0) throw std::invalid_argument("r must be >= 0");
    if (params.nu < 0.0) throw std::invalid_argument("nu must be >= 0");

    const double scale = params.nu + 0.5;
    const double ch = std::cosh(2.0 * params.r);
    const double sh = std::sinh(2.0 * params.r);
    const double phi = wrap_angle(params.phi);

    GaussianState state;
    state.mean_q = std::numbers::sqrt2 * params.alpha.real();
    state.mean_p = std::numbers::sqrt2 * params.alpha.imag();
    state.sigma_qq = scale * (ch + std::cos(phi) * sh);
    state.sigma_pp = scale * (ch - std::cos(phi) * sh);
    state.sigma_qp = scale * std::sin(phi) * sh;
    return state;
}

double covariance_det(const GaussianState& state) {
    return state.sigma_qq * state.sigma_pp - state.sigma_qp * state.sigma_qp;
}

double symplectic_eigenvalue(const GaussianState& state) {
    double d = covariance_det(state);
    if (d < 0.25 - kHeisenbergSlack) throw HeisenbergError(d);
    return std::sqrt(std::max(d, 0.25));
}

GaussianParams state_to_params(const GaussianState& state) {
    if (!(state.sigma_qq > 0.0) || !(state.sigma_pp > 0.0))
        throw std::invalid_argument("covariance diagonal must be positive");

    const double d = covariance_det(state);
    if (d < 0.25 - kHeisenbergSlack) throw HeisenbergError(d);
    const double root_d = std::sqrt(std::max(d, 0.25));

    // sigma_aa = <(delta a)^2> in the mode a = (q + i p)/sqrt(2); its modulus
    // carries the squeezing, its argument the squeezing angle.
    const double re_aa = 0.5 * (state.sigma_qq - state.sigma_pp);
    const double im_aa = state.sigma_qp;
    const double mod_aa = std::hypot(re_aa, im_aa);
    const double h = 0.5 * (state.sigma_qq + state.sigma_pp);

    GaussianParams params;
    params.alpha = {state.mean_q / std::numbers::sqrt2,
                    state.mean_p / std::numbers::sqrt2};
    params.nu = root_d - 0.5;
    // (h + |sigma_aa|)(h - |sigma_aa|) = d, so this is log of the largest
    // covariance eigenvalue over root_d, numerically stable for small r.
    params.r = 0.25 * std::log((h + mod_aa) * (h + mod_aa) / std::max(d, 0.25));
    params.phi = (mod_aa < 1e-15 * h) ? 0.0 : std::atan2(im_aa, re_aa);
    if (params.r < 0.0) params.r = 0.0;
    return params;
}

double von_neumann_entropy(double d) {
    if (!std::isfinite(d)) throw std::invalid_argument("d must be finite");
    if (d < 0.25 - kHeisenbergSlack) throw HeisenbergError(d);
    const double x = std::sqrt(std::max(d, 0.25));
    const double up = x + 0.5;
    const double dn = x - 0.5;
    if (dn <= 0.0) return 0.0;
    return up * std::log(up) - dn * std::log(dn);
}

}  // namespace gausslind
