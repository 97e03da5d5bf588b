#include "gausslind/propagator.hpp"

#include <cmath>
#include <stdexcept>

#include "gausslind/airy.hpp"
#include "gausslind/ode.hpp"

namespace gausslind {

namespace {

void require_omega0(double omega0) {
    if (!(omega0 > 0.0)) throw std::invalid_argument("omega0 must be > 0");
}

// Largest ramp time whose Airy argument stays inside the validated range.
bool ramp_in_airy_range(double omega0, double gamma, double t) {
    const double s = std::cbrt(omega0 * omega0 / (gamma * gamma));
    return std::abs(s * (1.0 + gamma * t)) <= 30.0 && s <= 30.0;
}

}  // namespace

namespace {

PropagatorMatrix integrate_pair(const FrequencyProfile& profile, double t_from,
                                double t_to, double tol) {
    using Vec4 = Eigen::Matrix<double, 4, 1>;
    Vec4 y0;
    y0 << 1.0, 0.0, 0.0, 1.0;  // (u, u', v, v')
    auto rhs = [&profile](double s, const Vec4& y) {
        const double w2 = omega_squared(profile, s);
        Vec4 dy;
        dy << y[1], -w2 * y[0], y[3], -w2 * y[2];
        return dy;
    };
    const Vec4 y = integrate_ode<4>(rhs, y0, t_from, t_to, tol);
    return {y[0], y[2], y[1], y[3]};
}

}  // namespace

PropagatorMatrix fundamental_pair(const FrequencyProfile& profile, double t,
                                  double tol) {
    return integrate_pair(profile, 0.0, t, tol);
}

PropagatorMatrix constant_propagator_closed(double omega0, double t) {
    require_omega0(omega0);
    const double c = std::cos(omega0 * t);
    const double s = std::sin(omega0 * t);
    return {c, s / omega0, -omega0 * s, c};
}

PropagatorMatrix iho_propagator_closed(double omega0, double t) {
    require_omega0(omega0);
    const double c = std::cosh(omega0 * t);
    const double s = std::sinh(omega0 * t);
    return {c, s / omega0, omega0 * s, c};
}

namespace {

// x'' + omega0^2 (1 + gamma t) x = 0 is solved by Ai(z), Bi(z) with
// z(t) = -(omega0^2/gamma^2)^{1/3} (1 + gamma t); the pair below is the
// fundamental solution normalized at t_from.
PropagatorMatrix ramp_pair_closed(double omega0, double gamma, double t_from,
                                  double t_to) {
    const double s = std::cbrt(omega0 * omega0 / (gamma * gamma));
    const double z0 = -s * (1.0 + gamma * t_from);
    const double zt = -s * (1.0 + gamma * t_to);
    const double zdot = -s * gamma;

    const AiryValues a0 = airy(z0);
    const AiryValues a = airy(zt);
    constexpr double kPi = 3.14159265358979323846;

    PropagatorMatrix r;
    r.u = kPi * (a0.bip * a.ai - a0.aip * a.bi);
    r.du = zdot * kPi * (a0.bip * a.aip - a0.aip * a.bip);
    r.v = kPi / zdot * (a0.ai * a.bi - a0.bi * a.ai);
    r.dv = kPi * (a0.ai * a.bip - a0.bi * a.aip);
    return r;
}

}  // namespace

PropagatorMatrix ramp_propagator_closed(double omega0, double gamma,
                                        double t) {
    require_omega0(omega0);
    if (gamma == 0.0)
        throw std::invalid_argument(
            "ramp propagator requires gamma != 0; use the constant form");
    return ramp_pair_closed(omega0, gamma, 0.0, t);
}

PropagatorMatrix propagator_at(const FrequencyProfile& profile, double t,
                               double tol) {
    return std::visit(
        [t, tol, &profile](const auto& p) -> PropagatorMatrix {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantProfile>) {
                return constant_propagator_closed(p.omega0, t);
            } else if constexpr (std::is_same_v<T, InvertedProfile>) {
                return iho_propagator_closed(p.omega0, t);
            } else if constexpr (std::is_same_v<T, SqrtRampProfile>) {
                if (p.gamma == 0.0)
                    return constant_propagator_closed(p.omega0, t);
                if (ramp_in_airy_range(p.omega0, p.gamma, t))
                    return ramp_propagator_closed(p.omega0, p.gamma, t);
                return fundamental_pair(profile, t, tol);
            } else {
                return fundamental_pair(profile, t, tol);
            }
        },
        profile);
}

PropagatorMatrix two_time_propagator(const FrequencyProfile& profile,
                                     double t_from, double t_to, double tol) {
    if (t_from == 0.0) return propagator_at(profile, t_to, tol);
    return std::visit(
        [&](const auto& p) -> PropagatorMatrix {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantProfile>) {
                return constant_propagator_closed(p.omega0, t_to - t_from);
            } else if constexpr (std::is_same_v<T, InvertedProfile>) {
                return iho_propagator_closed(p.omega0, t_to - t_from);
            } else if constexpr (std::is_same_v<T, SqrtRampProfile>) {
                if (p.gamma == 0.0)
                    return constant_propagator_closed(p.omega0,
                                                      t_to - t_from);
                if (ramp_in_airy_range(p.omega0, p.gamma, t_from) &&
                    ramp_in_airy_range(p.omega0, p.gamma, t_to))
                    return ramp_pair_closed(p.omega0, p.gamma, t_from, t_to);
                return integrate_pair(profile, t_from, t_to, tol);
            } else {
                return integrate_pair(profile, t_from, t_to, tol);
            }
        },
        profile);
}

}  // namespace gausslind
