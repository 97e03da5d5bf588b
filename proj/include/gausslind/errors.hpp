#pragma once

#include <stdexcept>
#include <string>

namespace gausslind {

// Covariance determinant below the uncertainty bound by more than the
// numeric slack.
class HeisenbergError : public std::domain_error {
public:
    explicit HeisenbergError(double det)
        : std::domain_error("covariance determinant " + std::to_string(det) +
                            " violates det(sigma) >= 1/4"),
          det_(det) {}

    double det() const noexcept { return det_; }

private:
    double det_;
};

// Adaptive ODE integration could not reach the requested tolerance.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature could not reach the requested tolerance. Carries the
// worst offending panel for diagnostics.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double panel_lo, double panel_hi,
                    double panel_err)
        : std::runtime_error(what),
          panel_lo_(panel_lo),
          panel_hi_(panel_hi),
          panel_err_(panel_err) {}

    double panel_lo() const noexcept { return panel_lo_; }
    double panel_hi() const noexcept { return panel_hi_; }
    double panel_err() const noexcept { return panel_err_; }

private:
    double panel_lo_;
    double panel_hi_;
    double panel_err_;
};

// Invalid run configuration (file contents, flags, or their combination).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gausslind
