#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gausslind/errors.hpp"

namespace gausslind {

namespace detail {

struct GaussNode {
    double x;
    double w;
};

// 15-point Gauss-Legendre rule on [-1, 1].
inline constexpr GaussNode kGauss15[15] = {
    {-0.9879925180204854284896, 0.03075324199611726835463},
    {-0.9372733924007059043078, 0.07036604748810812470927},
    {-0.8482065834104272162006, 0.1071592204671719350119},
    {-0.7244177313601700474162, 0.1395706779261543144478},
    {-0.5709721726085388475372, 0.1662692058169939335532},
    {-0.3941513470775633698972, 0.1861610000155622110268},
    {-0.2011940939974345223006, 0.1984314853271115764561},
    {0.0, 0.2025782419255612728806},
    {0.2011940939974345223006, 0.1984314853271115764561},
    {0.3941513470775633698972, 0.1861610000155622110268},
    {0.5709721726085388475372, 0.1662692058169939335532},
    {0.7244177313601700474162, 0.1395706779261543144478},
    {0.8482065834104272162006, 0.1071592204671719350119},
    {0.9372733924007059043078, 0.07036604748810812470927},
    {0.9879925180204854284896, 0.03075324199611726835463},
};

template <int N, class F>
Eigen::Matrix<double, N, 1> gauss15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    Eigen::Matrix<double, N, 1> acc = Eigen::Matrix<double, N, 1>::Zero();
    for (const auto& node : kGauss15) acc += node.w * f(mid + half * node.x);
    return half * acc;
}

}  // namespace detail

// Adaptive panel-bisection quadrature of a vector-valued integrand using a
// fixed 15-point Gauss-Legendre rule per panel. The absolute error budget
// tol is apportioned to panels by width; a panel whose bisection defect is
// already at the roundoff floor of its own magnitude is accepted as
// converged. Throws QuadratureError (with the worst panel) when subdivision
// stalls. max_panel bounds the initial panel width.
template <int N, class F>
Eigen::Matrix<double, N, 1> integrate_adaptive(F&& f, double a, double b,
                                               double tol, double max_panel) {
    using Vec = Eigen::Matrix<double, N, 1>;
    if (a == b) return Vec::Zero();
    if (!(tol > 0.0))
        throw QuadratureError("quadrature tolerance must be positive", a, b,
                              0.0);
    if (!(max_panel > 0.0))
        throw QuadratureError("quadrature max_panel must be positive", a, b,
                              0.0);

    struct Panel {
        double lo;
        double hi;
        Vec coarse;
    };

    const double width = std::abs(b - a);
    const int n0 = std::max(1, static_cast<int>(std::ceil(width / max_panel)));
    std::vector<Panel> stack;
    stack.reserve(static_cast<size_t>(n0) + 64);
    for (int i = 0; i < n0; ++i) {
        double lo = a + (b - a) * i / n0;
        double hi = (i + 1 == n0) ? b : a + (b - a) * (i + 1) / n0;
        stack.push_back({lo, hi, detail::gauss15<N>(f, lo, hi)});
    }

    Vec total = Vec::Zero();
    const double min_width = 1e-12 * width;
    const long max_panels = 200'000;
    long processed = 0;

    while (!stack.empty()) {
        Panel panel = stack.back();
        stack.pop_back();
        if (++processed > max_panels)
            throw QuadratureError(
                "quadrature panel budget exhausted on [" +
                    std::to_string(panel.lo) + ", " + std::to_string(panel.hi) +
                    "]",
                panel.lo, panel.hi, 0.0);

        const double mid = 0.5 * (panel.lo + panel.hi);
        Vec left = detail::gauss15<N>(f, panel.lo, mid);
        Vec right = detail::gauss15<N>(f, mid, panel.hi);
        Vec refined = left + right;
        const double err = (refined - panel.coarse).template lpNorm<Eigen::Infinity>();
        const double w = panel.hi - panel.lo;
        const double budget = tol * (w / width);
        const double floor =
            5e-14 * refined.template lpNorm<Eigen::Infinity>();

        if (err <= std::max(budget, floor)) {
            total += refined;
            continue;
        }
        if (w < min_width)
            throw QuadratureError(
                "quadrature failed to converge on [" +
                    std::to_string(panel.lo) + ", " + std::to_string(panel.hi) +
                    "], panel error " + std::to_string(err),
                panel.lo, panel.hi, err);
        stack.push_back({panel.lo, mid, left});
        stack.push_back({mid, panel.hi, right});
    }
    return total;
}

}  // namespace gausslind
