#pragma once

namespace gausslind {

struct AiryValues {
    double ai = 0.0;
    double aip = 0.0;
    double bi = 0.0;
    double bip = 0.0;
};

// Ai, Ai', Bi, Bi' at real z, |z| <= 30 (validated range; larger arguments
// throw std::domain_error). Maclaurin series in extended precision for
// moderate |z|, asymptotic expansions outside, and a Taylor continuation of
// the recessive pair across the cancellation-prone band 5 < z < 9.
AiryValues airy(double z);

}  // namespace gausslind
