#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace gausslind {

// omega^2(t) = omega0^2
struct ConstantProfile {
    double omega0 = 1.0;
};

// omega^2(t) = -omega0^2 (inverted oscillator)
struct InvertedProfile {
    double omega0 = 1.0;
};

// omega(t) = omega0 * sqrt(1 + gamma t), i.e. omega^2 linear in t.
struct SqrtRampProfile {
    double omega0 = 1.0;
    double gamma = 1.0;
};

// omega^2(t) sampled at strictly increasing times, linearly interpolated.
// Evaluation outside the sampled range throws std::out_of_range.
class TabulatedProfile {
public:
    explicit TabulatedProfile(std::vector<std::pair<double, double>> samples);

    double omega_squared(double t) const;
    const std::vector<std::pair<double, double>>& samples() const {
        return samples_;
    }

private:
    std::vector<std::pair<double, double>> samples_;
};

using FrequencyProfile =
    std::variant<ConstantProfile, InvertedProfile, SqrtRampProfile,
                 TabulatedProfile>;

// omega^2 at time t for any profile.
double omega_squared(const FrequencyProfile& profile, double t);

// Reference frequency omega0 used by the mode decomposition. For tabulated
// profiles this is sqrt(|omega^2(0)|); omega^2(0) must be nonzero and t = 0
// must lie inside the sampled range.
double reference_omega(const FrequencyProfile& profile);

struct ModeCoefficients {
    double f1 = 0.0;  // coefficient of (a'a + 1/2)
    double f2 = 0.0;  // coefficient of (a^2 + a'^2)
};

// Coefficients of H = p^2/2 + omega^2(t) q^2/2 in the fixed mode
// a = (sqrt(omega0) q + i p / sqrt(omega0)) / sqrt(2):
//   f1 = omega0/2 (omega^2/omega0^2 + 1), f2 = omega0/4 (omega^2/omega0^2 - 1).
ModeCoefficients mode_coefficients(const FrequencyProfile& profile, double t);

}  // namespace gausslind
