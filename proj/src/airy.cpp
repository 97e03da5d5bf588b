#include "gausslind/airy.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gausslind {

namespace {

// Ai(0) = 3^{-2/3}/Gamma(2/3), -Ai'(0) = 3^{-1/3}/Gamma(1/3)
constexpr long double kC1 = 0.3550280538878172392600631860041831763980L;
constexpr long double kC2 = 0.2588194037928067984051835601892039634793L;
constexpr long double kPi = 3.1415926535897932384626433832795028842L;
constexpr long double kSqrt3 = 1.7320508075688772935274463415058723670L;
constexpr long double kSqrtPi = 1.7724538509055160272981674833411451828L;

struct Quad {
    long double ai;
    long double bi;
    long double aip;
    long double bip;
};

// Maclaurin series Ai = C1 f - C2 g, Bi = sqrt3 (C1 f + C2 g) with
//   f = sum a_k z^{3k},   a_0 = 1, a_k = a_{k-1}/((3k-1) 3k),
//   g = sum b_k z^{3k+1}, b_0 = 1, b_k = b_{k-1}/(3k (3k+1)).
Quad series(long double z) {
    long double f = 1.0L, fp = 0.0L;
    long double g = z, gp = 1.0L;
    if (z != 0.0L) {
        const long double z3 = z * z * z;
        long double ta = 1.0L, tb = z;
        for (int k = 1; k < 400; ++k) {
            const long double n = 3.0L * k;
            ta *= z3 / ((n - 1.0L) * n);
            f += ta;
            fp += ta * n / z;
            tb *= z3 / (n * (n + 1.0L));
            g += tb;
            gp += tb * (n + 1.0L) / z;
            if (k > 4 && std::fabs(ta) < 1e-24L * std::fabs(f) &&
                std::fabs(tb) < 1e-24L * std::fabs(g))
                break;
        }
    }
    return {kC1 * f - kC2 * g, kSqrt3 * (kC1 * f + kC2 * g),
            kC1 * fp - kC2 * gp, kSqrt3 * (kC1 * fp + kC2 * gp)};
}

// Coefficients of the large-|z| expansions:
//   u_0 = 1, u_{k+1} = u_k (6k+1)(6k+3)(6k+5) / (216 (k+1)(2k+1)),
//   v_k = u_k (6k+1)/(1-6k).
struct UvTable {
    std::array<long double, 61> u{};
    std::array<long double, 61> v{};
    UvTable() {
        u[0] = 1.0L;
        v[0] = 1.0L;
        for (int k = 0; k < 60; ++k) {
            u[k + 1] = u[k] * (6.0L * k + 1.0L) * (6.0L * k + 3.0L) *
                       (6.0L * k + 5.0L) /
                       (216.0L * (k + 1.0L) * (2.0L * k + 1.0L));
            v[k + 1] = u[k + 1] * (6.0L * (k + 1) + 1.0L) /
                       (1.0L - 6.0L * (k + 1));
        }
    }
};

const UvTable& uv() {
    static const UvTable table;
    return table;
}

// sum_k c_k (sign/zeta)^k with optimal truncation.
long double asym_sum(const std::array<long double, 61>& c, long double zeta,
                     long double sign) {
    long double s = 0.0L, zp = 1.0L;
    long double prev = 1e400L;
    for (int k = 0; k < 61; ++k) {
        const long double term = c[k] * zp;
        if (std::fabs(term) > prev) break;
        s += term;
        prev = std::fabs(term);
        if (prev < 1e-24L * std::fabs(s)) break;
        zp *= sign / zeta;
    }
    return s;
}

// Alternating even/odd sub-sums of the oscillatory expansion:
// start = 0: sum_m (-1)^m c_{2m}   zeta^{-2m}
// start = 1: sum_m (-1)^m c_{2m+1} zeta^{-2m-1}
long double alt_sum(const std::array<long double, 61>& c, long double zeta,
                    int start) {
    long double s = 0.0L;
    long double zp = (start == 0) ? 1.0L : 1.0L / zeta;
    long double prev = 1e400L;
    int m = 0;
    for (int k = start; k < 61; k += 2, ++m) {
        const long double term = c[k] * zp * ((m % 2) ? -1.0L : 1.0L);
        if (std::fabs(term) > prev) break;
        s += term;
        prev = std::fabs(term);
        if (prev < 1e-24L * std::fabs(s)) break;
        zp /= zeta * zeta;
    }
    return s;
}

Quad asym_pos(long double z) {
    const auto& t = uv();
    const long double zeta = (2.0L / 3.0L) * std::pow(z, 1.5L);
    const long double z14 = std::pow(z, 0.25L);
    const long double em = std::exp(-zeta);
    const long double ep = std::exp(zeta);
    Quad q;
    q.ai = em / (2.0L * kSqrtPi * z14) * asym_sum(t.u, zeta, -1.0L);
    q.bi = ep / (kSqrtPi * z14) * asym_sum(t.u, zeta, 1.0L);
    q.aip = -z14 * em / (2.0L * kSqrtPi) * asym_sum(t.v, zeta, -1.0L);
    q.bip = z14 * ep / kSqrtPi * asym_sum(t.v, zeta, 1.0L);
    return q;
}

Quad asym_neg(long double z) {
    const auto& t = uv();
    const long double x = -z;
    const long double zeta = (2.0L / 3.0L) * std::pow(x, 1.5L);
    const long double x14 = std::pow(x, 0.25L);
    const long double w = zeta - kPi / 4.0L;
    const long double cw = std::cos(w), sw = std::sin(w);
    const long double pu = alt_sum(t.u, zeta, 0);
    const long double qu = alt_sum(t.u, zeta, 1);
    const long double pv = alt_sum(t.v, zeta, 0);
    const long double qv = alt_sum(t.v, zeta, 1);
    Quad q;
    q.ai = (cw * pu + sw * qu) / (kSqrtPi * x14);
    q.bi = (-sw * pu + cw * qu) / (kSqrtPi * x14);
    q.aip = x14 / kSqrtPi * (sw * pv - cw * qv);
    q.bip = x14 / kSqrtPi * (cw * pv + sw * qv);
    return q;
}

// One Taylor step of y'' = z y from z0 to z0 + h:
// c_{n+2} = (z0 c_n + c_{n-1}) / ((n+1)(n+2)).
void taylor_step(long double z0, long double& y, long double& yp,
                 long double h) {
    constexpr int kTerms = 40;
    long double c[kTerms + 2];
    c[0] = y;
    c[1] = yp;
    for (int n = 0; n < kTerms; ++n) {
        const long double cm1 = (n >= 1) ? c[n - 1] : 0.0L;
        c[n + 2] = (z0 * c[n] + cm1) / ((n + 1.0L) * (n + 2.0L));
    }
    long double s = 0.0L, sp = 0.0L;
    for (int n = kTerms + 1; n >= 1; --n) {
        s = s * h + c[n];
        sp = sp * h + c[n] * n;
    }
    y = s * h + c[0];
    yp = sp;
}

// The recessive pair (Ai, Ai') loses all accuracy to cancellation in the
// series just below the asymptotic regime; continue it down from the
// anchor z = 9 by Taylor steps of the defining equation instead.
void ai_continued(long double z, long double& ai, long double& aip) {
    static const Quad anchor = asym_pos(9.0L);
    long double t = 9.0L;
    ai = anchor.ai;
    aip = anchor.aip;
    while (t > z + 1e-18L) {
        const long double h = -std::min(0.75L, t - z);
        taylor_step(t, ai, aip, h);
        t += h;
    }
}

}  // namespace

AiryValues airy(double z) {
    if (!(std::abs(z) <= 30.0))
        throw std::domain_error("airy: argument " + std::to_string(z) +
                                " outside validated range |z| <= 30");
    const long double zl = z;
    Quad q;
    if (zl > 9.0L) {
        q = asym_pos(zl);
    } else if (zl > 5.0L) {
        q = series(zl);
        ai_continued(zl, q.ai, q.aip);
    } else if (zl >= -7.5L) {
        q = series(zl);
    } else {
        q = asym_neg(zl);
    }
    return {static_cast<double>(q.ai), static_cast<double>(q.aip),
            static_cast<double>(q.bi), static_cast<double>(q.bip)};
}

}  // namespace gausslind
