#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "gausslind/errors.hpp"
#include "gausslind/evolution.hpp"

using namespace gausslind;

namespace {

double max_abs_diff(const Mat2& a, const Mat2& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

GaussianState squeezed_vacuum(double r) {
    GaussianParams p;
    p.r = r;
    return params_to_state(p);
}

}  // namespace

TEST_CASE("m_matrix vanishes without damping or elapsed time") {
    CHECK(m_matrix(ConstantProfile{1.0}, {0.0, 3.0}, 5.0, 1e-10).norm() ==
          0.0);
    CHECK(m_matrix(InvertedProfile{1.0}, {1.0, 0.0}, 0.0, 1e-10).norm() ==
          0.0);
    CHECK_THROWS_AS(m_matrix(ConstantProfile{1.0}, {1.0, 0.0}, -1.0, 1e-10),
                    std::invalid_argument);
}

TEST_CASE("m_matrix for the resonant constant profile is isotropic") {
    // At omega0 = 1 the propagator is a rotation, so the accumulated noise
    // is (n_bar + 1/2)(1 - e^{-2kt}) I.
    const BathParams bath{1.0, 0.0};
    const double t = std::log(2.0);
    const Mat2 m = m_matrix(ConstantProfile{1.0}, bath, t, 1e-12);
    CHECK(std::abs(m(0, 0) - 0.375) <= 1e-11);
    CHECK(std::abs(m(1, 1) - 0.375) <= 1e-11);
    CHECK(std::abs(m(0, 1)) <= 1e-11);
}

TEST_CASE("m_matrix saturates for the strongly damped inverted profile") {
    const Mat2 m = m_matrix(InvertedProfile{1.0}, {1.5, 0.0}, 20.0, 1e-10);
    Mat2 expected;
    expected << 0.9, -0.6, -0.6, 0.9;
    CHECK(max_abs_diff(m, expected) <= 1e-6);
}

TEST_CASE("closed-form iho noise matrix matches quadrature") {
    for (double k : {0.3, 1.0, 2.0}) {
        for (double t : {0.5, 1.0, 5.0}) {
            CAPTURE(k);
            CAPTURE(t);
            const BathParams bath{k, 0.7};
            const Mat2 closed = m_matrix_iho_closed(1.0, bath, t);
            const Mat2 quad = m_matrix(InvertedProfile{1.0}, bath, t, 1e-12);
            CHECK(max_abs_diff(closed, quad) <=
                  1e-9 * std::max(1.0, quad.cwiseAbs().maxCoeff()));
        }
    }
}

TEST_CASE("closed-form iho noise matrix away from omega0 = 1") {
    const BathParams bath{0.8, 1.2};
    for (double t : {0.4, 2.0}) {
        CAPTURE(t);
        const Mat2 closed = m_matrix_iho_closed(2.0, bath, t);
        const Mat2 quad = m_matrix(InvertedProfile{2.0}, bath, t, 1e-12);
        CHECK(max_abs_diff(closed, quad) <=
              1e-9 * std::max(1.0, quad.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("degenerate damping k = omega0 stays finite and accurate") {
    const BathParams bath{1.0, 0.0};
    for (double t : {0.5, 1.0, 5.0}) {
        CAPTURE(t);
        const Mat2 closed = m_matrix_iho_closed(1.0, bath, t);
        const Mat2 quad = m_matrix(InvertedProfile{1.0}, bath, t, 1e-12);
        CHECK(max_abs_diff(closed, quad) <=
              1e-9 * std::max(1.0, quad.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("evolve at t = 0 returns the initial state") {
    const GaussianState st0 = squeezed_vacuum(1.0);
    const GaussianState st =
        evolve(st0, InvertedProfile{1.0}, {1.5, 0.0}, 0.0);
    CHECK(st.sigma_qq == doctest::Approx(st0.sigma_qq).epsilon(1e-14));
    CHECK(st.sigma_pp == doctest::Approx(st0.sigma_pp).epsilon(1e-14));
    CHECK(st.sigma_qp == doctest::Approx(st0.sigma_qp).epsilon(1e-14));
}

TEST_CASE("undamped evolution is symplectic: determinant is conserved") {
    const GaussianState st0 = squeezed_vacuum(1.0);
    for (const FrequencyProfile& profile :
         {FrequencyProfile{ConstantProfile{1.0}},
          FrequencyProfile{InvertedProfile{1.0}},
          FrequencyProfile{SqrtRampProfile{1.0, 1.0}}}) {
        for (double t : {1.0, 5.0, 10.0}) {
            CAPTURE(t);
            const GaussianState st = evolve(st0, profile, {0.0, 0.0}, t);
            // Conservation holds at the precision the determinant can be
            // extracted from the amplified covariance: its subtraction
            // cancels from products the size of the entries squared.
            const double scale = std::max(
                1.0, st.sigma_qq * st.sigma_pp + st.sigma_qp * st.sigma_qp);
            CHECK(std::abs(covariance_det(st) - 0.25) <= 1e-9 * scale);
        }
    }
}

TEST_CASE("thermal bath drives any state to the thermal fixed point") {
    const BathParams bath{1.0, 3.0};
    const GaussianState st =
        evolve(squeezed_vacuum(1.0), ConstantProfile{1.0}, bath, 20.0);
    Mat2 expected = 3.5 * Mat2::Identity();
    CHECK(max_abs_diff(st.covariance(), expected) <= 1e-6);
    CHECK(std::abs(covariance_det(st) - 12.25) <= 1e-5);
}

TEST_CASE("vacuum is the fixed point of a zero-temperature bath") {
    const GaussianState st =
        evolve(params_to_state({}), ConstantProfile{1.0}, {0.7, 0.0}, 15.0);
    CHECK(std::abs(st.sigma_qq - 0.5) <= 1e-4);
    CHECK(std::abs(st.sigma_pp - 0.5) <= 1e-4);
    CHECK(std::abs(st.sigma_qp) <= 1e-4);
}

TEST_CASE("means decay through the damped rotation") {
    GaussianParams p;
    p.alpha = {1.0, 0.0};
    const double t = 2.0;
    const GaussianState st =
        evolve(params_to_state(p), ConstantProfile{1.0}, {0.5, 0.0}, t);
    const double damp = std::exp(-0.5 * t);
    CHECK(std::abs(st.mean_q - damp * std::numbers::sqrt2 * std::cos(t)) <=
          1e-10);
    CHECK(std::abs(st.mean_p + damp * std::numbers::sqrt2 * std::sin(t)) <=
          1e-10);
}

TEST_CASE("characteristic function at the origin is one") {
    const GaussianState st = squeezed_vacuum(0.7);
    CHECK(chi_at(st, 0.0, 0.0) == std::complex<double>(1.0, 0.0));
}

TEST_CASE("characteristic function of vacuum and thermal states") {
    const GaussianState vac = params_to_state({});
    CHECK(std::abs(chi_at(vac, 1.0, 0.0) - std::exp(-0.25)) <= 1e-15);
    GaussianParams p;
    p.nu = 3.0;
    const GaussianState th = params_to_state(p);
    CHECK(std::abs(chi_at(th, 1.0, 1.0) - std::exp(-3.5)) <= 1e-15);
}

TEST_CASE("characteristic function picks up the displacement phase") {
    GaussianParams p;
    p.alpha = {1.0 / std::numbers::sqrt2, 0.0};  // mean_q = 1
    const GaussianState st = params_to_state(p);
    const std::complex<double> got = chi_at(st, 0.5, 0.0);
    const std::complex<double> expected =
        std::exp(std::complex<double>(-0.125 * 0.5, 0.5));
    CHECK(std::abs(got - expected) <= 1e-15);
}

TEST_CASE("trajectory grid and initial sample") {
    GaussianParams p;
    p.r = 1.0;
    const Trajectory traj =
        trajectory(p, InvertedProfile{1.0}, {1.5, 0.0}, 20.0, 41);
    REQUIRE(traj.size() == 41);
    CHECK(traj.front().t == 0.0);
    CHECK(traj.back().t == doctest::Approx(20.0));
    CHECK(traj[1].t == doctest::Approx(0.5));
    CHECK(std::abs(traj.front().det - 0.25) <= 1e-12);
    CHECK(traj.front().entropy == 0.0);
    CHECK(std::abs(traj.front().r - 1.0) <= 1e-10);
}

TEST_CASE("strongly damped iho entropy saturates at the asymptote") {
    GaussianParams p;
    p.r = 1.0;
    const Trajectory traj =
        trajectory(p, InvertedProfile{1.0}, {1.5, 0.0}, 20.0, 21);
    CHECK(std::abs(traj.back().det - 0.45) <= 1e-3);
    CHECK(std::abs(traj.back().entropy - 0.48650786667496193) <= 1e-3);
    CHECK(traj.back().entropy > traj.front().entropy);
}

TEST_CASE("weakly damped iho entropy keeps growing") {
    GaussianParams p;
    p.r = 1.0;
    const Trajectory traj =
        trajectory(p, InvertedProfile{1.0}, {0.5, 0.0}, 10.0, 41);
    for (size_t i = 9; i + 1 < traj.size(); ++i)  // from t = 2 on
        CHECK(traj[i + 1].entropy > traj[i].entropy);
}

TEST_CASE("trajectory validates its grid arguments") {
    CHECK_THROWS_AS(
        trajectory({}, ConstantProfile{1.0}, {0.0, 0.0}, 0.0, 10),
        std::invalid_argument);
    CHECK_THROWS_AS(
        trajectory({}, ConstantProfile{1.0}, {0.0, 0.0}, 1.0, 1),
        std::invalid_argument);
}

TEST_CASE("determinant asymptote for the damped inverted profile") {
    CHECK(std::abs(d_asymptote_iho(1.0, {1.5, 0.0}) - 0.45) <= 1e-12);
    CHECK(std::abs(d_asymptote_iho(1.0, {1.5, 3.0}) - 22.05) <= 1e-12);
    // k^2 (n_bar + 1/2)^2 / (k^2 - 1) at omega0 = 1
    CHECK(d_asymptote_iho(1.0, {2.0, 1.0}) ==
          doctest::Approx(4.0 * 2.25 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(d_asymptote_iho(1.0, {1.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(d_asymptote_iho(1.0, {0.5, 0.0}), std::domain_error);
}

TEST_CASE("determinant asymptote approaches the thermal limit for large k") {
    const double d = d_asymptote_iho(1.0, {1e4, 3.0});
    CHECK(std::abs(d - 12.25) <= 1e-6 * 12.25);
}

TEST_CASE("asymptote matches the long-time evolution away from omega0 = 1") {
    const BathParams bath{3.0, 0.5};
    const double target = d_asymptote_iho(2.0, bath);
    const GaussianState st =
        evolve(squeezed_vacuum(0.5), InvertedProfile{2.0}, bath, 12.0);
    CHECK(std::abs(covariance_det(st) - target) <= 1e-6 * target);
}

TEST_CASE("ramp trajectory with thermal start reproduces its entropy") {
    GaussianParams p;
    p.nu = 3.0;
    const Trajectory traj =
        trajectory(p, SqrtRampProfile{1.0, 1.0}, {1.0, 0.0}, 2.0, 5);
    CHECK(std::abs(traj.front().entropy - 2.2493405784752334) <= 1e-9);
}
