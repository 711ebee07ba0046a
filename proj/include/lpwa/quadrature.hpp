#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "lpwa/errors.hpp"

namespace lpwa::quad {

// Gauss-Kronrod 7-15 pair on [a, b]. Returns the K15 estimate and the
// |K15 - G7| error indicator.
template <class F>
std::pair<double, double> gk15(F&& f, double a, double b) {
    // abscissa, Gauss-7 weight (0 on Kronrod-only nodes), Kronrod-15 weight
    static const double nw[8][3] = {
        {0.000000000000000, 0.417959183673469, 0.209482141084728},
        {0.405845151377397, 0.381830050505119, 0.190350578064785},
        {0.741531185599394, 0.279705391489277, 0.140653259715525},
        {0.949107912342759, 0.129484966168870, 0.063092092629979},
        {0.207784955007898, 0.0, 0.204432940075298},
        {0.586087235467691, 0.0, 0.169004726639267},
        {0.864864423359769, 0.0, 0.104790010322250},
        {0.991455371120813, 0.0, 0.022935322010529}};

    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double y0 = f(mid);
    double g7 = nw[0][1] * y0;
    double k15 = nw[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * nw[i][0];
        const double yi = f(mid + dx) + f(mid - dx);
        g7 += nw[i][1] * yi;
        k15 += nw[i][2] * yi;
    }
    return {k15 * half, std::fabs((k15 - g7) * half)};
}

// Adaptive bisection on [a, b] until every interval satisfies
// err <= rel_tol * |sum| or err <= abs_tol. Throws quadrature_error when the
// interval budget is exhausted.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                 double abs_tol = 0.0, std::size_t max_intervals = 20000) {
    if (a == b) return 0.0;
    struct Seg { double a, b, val, err; };
    std::vector<Seg> stack;
    auto [v0, e0] = gk15(f, a, b);
    stack.push_back({a, b, v0, e0});
    double total = v0, total_err = e0;
    std::size_t splits = 0;

    while (total_err > rel_tol * std::fabs(total) && total_err > abs_tol) {
        // split the worst segment
        std::size_t worst = 0;
        for (std::size_t i = 1; i < stack.size(); ++i)
            if (stack[i].err > stack[worst].err) worst = i;
        Seg s = stack[worst];
        if (!(s.b - s.a > 0.0) || s.err <= abs_tol ||
            s.b - s.a < 1e-15 * (std::fabs(s.a) + std::fabs(s.b)))
            break;  // cannot refine further
        if (++splits > max_intervals)
            throw quadrature_error("adaptive quadrature: interval budget exhausted");
        const double mid = 0.5 * (s.a + s.b);
        auto [vl, el] = gk15(f, s.a, mid);
        auto [vr, er] = gk15(f, mid, s.b);
        total += vl + vr - s.val;
        total_err += el + er - s.err;
        stack[worst] = {s.a, mid, vl, el};
        stack.push_back({mid, s.b, vr, er});
    }
    return total;
}

// Integral over [a, inf) for integrands with an eventually-decaying tail:
// fixed segment [a, a+w], then geometrically growing segments until two
// consecutive ones contribute less than rel_tol of the running total.
template <class F>
double integrate_to_inf(F&& f, double a, double first_width, double rel_tol = 1e-9,
                        int max_doublings = 60) {
    double lo = a, w = first_width;
    double total = 0.0;
    int quiet = 0;
    for (int i = 0; i < max_doublings; ++i) {
        const double hi = lo + w;
        const double seg = integrate(f, lo, hi, rel_tol, 0.0);
        total += seg;
        if (std::fabs(seg) <= rel_tol * std::fabs(total)) {
            if (++quiet >= 2) return total;
        } else {
            quiet = 0;
        }
        lo = hi;
        w *= 2.0;
    }
    throw quadrature_error("integrate_to_inf: tail did not converge");
}

}  // namespace lpwa::quad
