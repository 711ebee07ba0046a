#include "lpwa/special.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "lpwa/errors.hpp"

namespace lpwa::sf {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// E1(ix) by the standard continued fraction, evaluated with the modified
// Lentz algorithm. Valid for x > 0; used above the series switchover.
std::complex<double> e1_of_ix(double x) {
    const std::complex<double> z(0.0, x);
    const double tiny = 1e-300;
    std::complex<double> b = z + 1.0;
    std::complex<double> c = 1.0 / tiny;
    std::complex<double> d = 1.0 / b;
    std::complex<double> h = d;
    for (int i = 1; i <= 400; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del - 1.0) < 4.0 * std::numeric_limits<double>::epsilon())
            return h * std::exp(-z);
    }
    throw quadrature_error("si_ci: continued fraction failed to converge");
}

}  // namespace

std::pair<double, double> si_ci(double x) {
    if (!(x > 0.0)) throw std::domain_error("si_ci: requires x > 0");
    constexpr double switchover = 2.0;  // series below, continued fraction above
    if (x <= switchover) {
        // Si series: sum (-1)^k x^(2k+1) / ((2k+1)(2k+1)!)
        // Ci series: gamma + ln x + sum (-1)^k x^(2k) / (2k (2k)!)
        double si_sum = x, term = x;
        for (int k = 1; k <= 60; ++k) {
            term *= -x * x / ((2.0 * k) * (2.0 * k + 1.0));
            const double add = term / (2.0 * k + 1.0);
            si_sum += add;
            if (std::fabs(add) < 1e-17 * std::fabs(si_sum)) break;
        }
        double ci_sum = 0.0;
        term = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -x * x / ((2.0 * k - 1.0) * (2.0 * k));
            const double add = term / (2.0 * k);
            ci_sum += add;
            if (std::fabs(add) < 1e-17) break;
        }
        return {si_sum - std::numbers::pi / 2.0, kEulerGamma + std::log(x) + ci_sum};
    }
    // E1(ix) = -Ci(x) + i si(x)
    const std::complex<double> e1 = e1_of_ix(x);
    return {e1.imag(), -e1.real()};
}

double erfcx(double x) {
    if (x < 12.0) return std::exp(x * x) * std::erfc(x);
    // asymptotic: erfcx(x) ~ (1/(x sqrt(pi))) sum (-1)^k (2k-1)!! / (2x^2)^k
    const double inv2x2 = 1.0 / (2.0 * x * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 10; ++k) {
        term *= -(2.0 * k - 1.0) * inv2x2;
        sum += term;
    }
    return sum / (x * std::sqrt(std::numbers::pi));
}

double bessel_i0e(double x) {
    if (x < 600.0) return std::exp(-x) * std::cyl_bessel_i(0.0, x);
    // asymptotic: I0(x) e^-x ~ (2 pi x)^(-1/2) (1 + 1/(8x) + 9/(2!(8x)^2) + ...)
    const double ix = 1.0 / (8.0 * x);
    double term = 1.0, sum = 1.0;
    for (int k = 1; k <= 6; ++k) {
        const double num = (2.0 * k - 1.0);
        term *= num * num * ix / k;
        sum += term;
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

double g_tail_scaled(double x, int l) {
    if (l < 1) throw std::domain_error("g_tail: l >= 1");
    const double rt_pi = std::sqrt(std::numbers::pi);
    if (l == 1) return 0.5 * rt_pi * erfcx(x);
    if (l == 2) {
        if (x > 40.0) {
            // exp(x^2) int_x^inf (z-x) e^{-z^2} dz = int_0^inf t e^{-2xt-t^2} dt
            const double u = 1.0 / (x * x);
            return 0.25 * u * (1.0 + u * (-1.5 + u * (3.75 + u * (-13.125 + u * 59.0625))));
        }
        return 0.5 - 0.5 * rt_pi * x * erfcx(x);
    }
    // integration-by-parts recursion:
    //   G_{l+1} = ((l-1)/2) G_{l-1} - x G_l,  seeded by G_1, G_2
    double gm1 = g_tail_scaled(x, 1);
    double g = g_tail_scaled(x, 2);
    for (int m = 2; m < l; ++m) {
        const double next = 0.5 * (m - 1.0) * gm1 - x * g;
        gm1 = g;
        g = next;
    }
    return g;
}

double g_tail(double x, int l) { return std::exp(-x * x) * g_tail_scaled(x, l); }

}  // namespace lpwa::sf
