#pragma once

#include <utility>

namespace lpwa::sf {

// Shifted sine / cosine integrals:
//   si(x) = Si(x) - pi/2 = -int_x^inf sin(t)/t dt
//   ci(x) = Ci(x)        = -int_x^inf cos(t)/t dt
// Power series for x <= 2, complex continued fraction of E1(ix) above
// (modified Lentz). Absolute accuracy ~1e-14. ci requires x > 0.
std::pair<double, double> si_ci(double x);

// exp(x^2) * erfc(x) for x >= 0 without overflow.
double erfcx(double x);

// exp(-x) * I0(x) for x >= 0.
double bessel_i0e(double x);

// g_tail(x, l) = int_x^inf (z - x)^(l-1) exp(-z^2) dz, l >= 1.
// g_tail_scaled returns exp(x^2) * g_tail(x, l), stable for large x.
double g_tail(double x, int l);
double g_tail_scaled(double x, int l);

}  // namespace lpwa::sf
