#include "gausslind/frequency_profile.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <string>

namespace gausslind {

TabulatedProfile::TabulatedProfile(
    std::vector<std::pair<double, double>> samples)
    : samples_(std::move(samples)) {
    if (samples_.size() < 2)
        throw std::invalid_argument("tabulated profile needs >= 2 samples");
    for (size_t i = 0; i < samples_.size(); ++i) {
        if (!std::isfinite(samples_[i].first) ||
            !std::isfinite(samples_[i].second))
            throw std::invalid_argument("tabulated profile entries must be finite");
        if (i > 0 && !(samples_[i].first > samples_[i - 1].first))
            throw std::invalid_argument(
                "tabulated profile times must be strictly increasing");
    }
}

double TabulatedProfile::omega_squared(double t) const {
    if (t < samples_.front().first || t > samples_.back().first)
        throw std::out_of_range("t = " + std::to_string(t) +
                                " outside tabulated range [" +
                                std::to_string(samples_.front().first) + ", " +
                                std::to_string(samples_.back().first) + "]");
    auto it = std::lower_bound(
        samples_.begin(), samples_.end(), t,
        [](const std::pair<double, double>& s, double v) { return s.first < v; });
    if (it == samples_.begin()) return it->second;
    auto prev = std::prev(it);
    if (it == samples_.end()) return prev->second;
    const double w = (t - prev->first) / (it->first - prev->first);
    return prev->second + w * (it->second - prev->second);
}

double omega_squared(const FrequencyProfile& profile, double t) {
    return std::visit(
        [t](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, ConstantProfile>)
                return p.omega0 * p.omega0;
            else if constexpr (std::is_same_v<T, InvertedProfile>)
                return -p.omega0 * p.omega0;
            else if constexpr (std::is_same_v<T, SqrtRampProfile>)
                return p.omega0 * p.omega0 * (1.0 + p.gamma * t);
            else
                return p.omega_squared(t);
        },
        profile);
}

double reference_omega(const FrequencyProfile& profile) {
    return std::visit(
        [](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, TabulatedProfile>) {
                const double w2 = p.omega_squared(0.0);
                if (w2 == 0.0)
                    throw std::invalid_argument(
                        "tabulated profile has omega^2(0) = 0, no reference "
                        "frequency");
                return std::sqrt(std::abs(w2));
            } else {
                if (!(p.omega0 > 0.0))
                    throw std::invalid_argument("omega0 must be > 0");
                return p.omega0;
            }
        },
        profile);
}

ModeCoefficients mode_coefficients(const FrequencyProfile& profile, double t) {
    const double w0 = reference_omega(profile);
    const double ratio = omega_squared(profile, t) / (w0 * w0);
    return {0.5 * w0 * (ratio + 1.0), 0.25 * w0 * (ratio - 1.0)};
}

}  // namespace gausslind
