#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "gausslind/errors.hpp"

namespace gausslind {

// Adaptive Dormand-Prince 5(4) with absolute and relative tolerance both
// equal to tol. Integrates y' = rhs(t, y) from t0 to exactly t1, forward or
// backward. Throws IntegrationError on step-size underflow.
template <int N, class Rhs>
Eigen::Matrix<double, N, 1> integrate_ode(Rhs&& rhs,
                                          Eigen::Matrix<double, N, 1> y,
                                          double t0, double t1, double tol) {
    using Vec = Eigen::Matrix<double, N, 1>;

    if (t0 == t1) return y;
    if (!(tol > 0.0)) throw IntegrationError("ode tolerance must be positive");

    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113,
                            b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                            b6 = 11.0 / 84;
    static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600,
                            e3 = 500.0 / 1113 - 7571.0 / 16695,
                            e4 = 125.0 / 192 - 393.0 / 640,
                            e5 = -2187.0 / 6784 + 92097.0 / 339200,
                            e6 = 11.0 / 84 - 187.0 / 2100,
                            e7 = -1.0 / 40;
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                            c5 = 8.0 / 9;

    const double dir = (t1 > t0) ? 1.0 : -1.0;
    double t = t0;
    double h = dir * std::min(std::abs(t1 - t0), 0.1);
    Vec k1 = rhs(t, y);
    bool last = false;

    for (long step = 0; step < 10'000'000; ++step) {
        if ((t + h - t1) * dir >= 0.0) {
            h = t1 - t;
            last = true;
        }

        Vec k2 = rhs(t + c2 * h, Vec(y + h * (a21 * k1)));
        Vec k3 = rhs(t + c3 * h, Vec(y + h * (a31 * k1 + a32 * k2)));
        Vec k4 = rhs(t + c4 * h, Vec(y + h * (a41 * k1 + a42 * k2 + a43 * k3)));
        Vec k5 = rhs(t + c5 * h,
                     Vec(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)));
        Vec k6 = rhs(t + h, Vec(y + h * (a61 * k1 + a62 * k2 + a63 * k3 +
                                         a64 * k4 + a65 * k5)));
        Vec y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        Vec k7 = rhs(t + h, y5);
        Vec err_vec =
            h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double err = 0.0;
        for (int i = 0; i < N; ++i) {
            double sc =
                tol + tol * std::max(std::abs(y[i]), std::abs(y5[i]));
            double r = err_vec[i] / sc;
            err += r * r;
        }
        err = std::sqrt(err / N);

        if (err <= 1.0) {
            t += h;
            y = y5;
            k1 = k7;
            if (last) return y;
        } else {
            last = false;
        }

        double factor = (err == 0.0)
                            ? 5.0
                            : std::clamp(0.9 * std::pow(err, -0.2), 0.2, 5.0);
        h *= factor;
        if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(t))) {
            throw IntegrationError("ode step size underflow at t = " +
                                   std::to_string(t));
        }
    }
    throw IntegrationError("ode step limit exceeded");
}

}  // namespace gausslind
