#include "lpwa/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "lpwa/errors.hpp"
#include "lpwa/quadrature.hpp"
#include "lpwa/special.hpp"

namespace lpwa {

namespace {

constexpr double kPi = std::numbers::pi;

double code_gain(const NetworkConfig& net, int j) {
    return j == 1 ? 1.0 : net.rejection;
}

double activity_of(const ActivityFactors& af, int j) {
    return j == 1 ? af.same_code : af.diff_code;
}

// Rice density of the distance between a point at range rho and a point
// scattered isotropically N(0, sigma^2 I2) around the origin.
double rice_pdf(double r, double rho, double sigma) {
    const double s2 = sigma * sigma;
    const double d = r - rho;
    return (r / s2) * std::exp(-0.5 * d * d / s2) * sf::bessel_i0e(r * rho / s2);
}

// One minus the fading Laplace factor of a single interferer at range r.
struct OneMinusU {
    double s_scale;  // Omega * s * Q * P / m
    const ChannelModel* ch;
    double operator()(double r) const {
        const double x = s_scale / (ch->alpha1 + ch->alpha2 * std::pow(r, ch->delta));
        if (ch->m == 1) return x / (1.0 + x);
        return 1.0 - std::pow(1.0 + x, -static_cast<double>(ch->m));
    }
};

// V(rho) = E_{X ~ N(0, sigma^2 I)}[1 - u(|rho e1 + X|)]; the kernel mass
// lives in [rho - 12 sigma, rho + 12 sigma].
double cluster_mean_one_minus_u(double rho, double sigma, const OneMinusU& omu,
                                double tol) {
    const double lo = std::max(0.0, rho - 12.0 * sigma);
    const double hi = rho + 12.0 * sigma;
    auto f = [&](double r) { return omu(r) * rice_pdf(r, rho, sigma); };
    return quad::integrate(f, lo, hi, tol, 1e-300);
}

// Radius where the single-interferer term transitions (s_scale * g = 1);
// sets the scale of the outer radial integrals.
double transition_radius(double s_scale, const ChannelModel& ch) {
    if (s_scale <= ch.alpha1) return 0.0;
    return std::pow((s_scale - ch.alpha1) / ch.alpha2, 1.0 / ch.delta);
}

double radial_to_inf(const std::function<double(double)>& f, double first_width,
                     double tol, double trunc_radius) {
    if (trunc_radius > 0.0) return quad::integrate(f, 0.0, trunc_radius, tol, 1e-300);
    return quad::integrate_to_inf(f, 0.0, first_width, tol);
}

}  // namespace

double nakagami_pdf(double q, const ChannelModel& ch) {
    if (q < 0.0) throw model_error("nakagami_pdf: q >= 0 required");
    const double m = ch.m;
    return std::pow(m / ch.omega, m) / std::tgamma(m) * std::pow(q, m - 1.0) *
           std::exp(-m * q / ch.omega);
}

double laplace_fading(double s, double scale, const ChannelModel& ch) {
    if (s < 0.0 || scale < 0.0) throw model_error("laplace_fading: s, scale >= 0");
    return std::pow(1.0 + ch.omega * s * scale / ch.m, -static_cast<double>(ch.m));
}

double laplace_inter_cluster(double s, const Scenario& sc, int interest_id,
                             const SuccessModel& sm) {
    if (s < 0.0) throw model_error("laplace_inter_cluster: s >= 0");
    if (s == 0.0) return 1.0;
    (void)sc.index_of(interest_id);
    double exponent = 0.0;
    for (const TrafficClass& tc : sc.classes) {
        const ActivityFactors af = activity_factors(tc, sc.network);
        for (int j = 1; j <= 2; ++j) {
            const double uh = activity_of(af, j);
            const double q = code_gain(sc.network, j);
            if (uh == 0.0 || q == 0.0) continue;
            const OneMinusU omu{sc.channel.omega * s * q * tc.tx_power / sc.channel.m,
                                &sc.channel};
            const double inner_tol = std::min(sm.quad_tol, 1e-9);
            auto shell = [&](double rho) {
                const double v = cluster_mean_one_minus_u(rho, tc.sigma_scatter, omu,
                                                          inner_tol);
                return -std::expm1(-uh * v) * 2.0 * kPi * rho;
            };
            const double width = std::max(4.0 * tc.sigma_scatter,
                                          transition_radius(omu.s_scale, sc.channel));
            exponent += tc.lambda_parent *
                        radial_to_inf(shell, width, sm.quad_tol, sm.trunc_radius);
        }
    }
    return std::exp(-exponent);
}

double laplace_intra_cluster(double s, const Scenario& sc, int interest_id,
                             const SuccessModel& sm) {
    if (s < 0.0) throw model_error("laplace_intra_cluster: s >= 0");
    if (s == 0.0) return 1.0;
    const TrafficClass& tc = sc.classes[sc.index_of(interest_id)];
    const ActivityFactors af = activity_factors(tc, sc.network);
    if (af.total() == 0.0) return 1.0;

    const double sigma = tc.sigma_scatter;
    const double inner_tol = std::min(sm.quad_tol, 1e-9);
    OneMinusU omu[2] = {{0.0, &sc.channel}, {0.0, &sc.channel}};
    for (int j = 1; j <= 2; ++j)
        omu[j - 1].s_scale =
            sc.channel.omega * s * code_gain(sc.network, j) * tc.tx_power / sc.channel.m;

    auto f = [&](double rho) {
        double e = 0.0;
        for (int j = 1; j <= 2; ++j) {
            const double uh = activity_of(af, j);
            if (uh == 0.0 || omu[j - 1].s_scale == 0.0) continue;
            e += uh * cluster_mean_one_minus_u(rho, sigma, omu[j - 1], inner_tol);
        }
        const double s2 = sigma * sigma;
        return std::exp(-e) * (rho / s2) * std::exp(-0.5 * rho * rho / s2);
    };
    return quad::integrate(f, 0.0, 12.0 * sigma, sm.quad_tol, 1e-300);
}

double laplace_total(double s, const Scenario& sc, int interest_id,
                     const SuccessModel& sm) {
    return laplace_inter_cluster(s, sc, interest_id, sm) *
           laplace_intra_cluster(s, sc, interest_id, sm);
}

double h_function_point(double z, double xi, const ChannelModel& ch) {
    if (ch.alpha1 != 0.0) throw model_error("h_function_point: requires alpha1 = 0");
    if (ch.delta <= 2.0) throw model_error("h_function_point: requires delta > 2");
    if (z < 0.0 || xi < 0.0) throw model_error("h_function_point: z, xi >= 0");
    if (z == 0.0 || xi == 0.0) return 0.0;
    return z * z * std::pow(xi, 2.0 / ch.delta) * 2.0 * kPi * kPi /
           (ch.delta * std::sin(2.0 * kPi / ch.delta));
}

double h_function_cluster(double z, double xi, double sigma, const ChannelModel& ch) {
    if (ch.delta != 4.0 || ch.alpha1 != 0.0)
        throw model_error("h_function_cluster: requires g = alpha r^-4");
    if (z < 0.0 || xi < 0.0 || sigma <= 0.0)
        throw model_error("h_function_cluster: bad arguments");
    if (z == 0.0 || xi == 0.0) return 0.0;
    const double a = std::sqrt(xi) * z * z / (4.0 * sigma * sigma);
    if (a > 1e3) {
        // H(a) = int_0^inf e^-t / (1 + (t/a)^2) dt ~ 1 - 2!/a^2 + 4!/a^4 - ...
        const double u = 1.0 / (a * a);
        return 1.0 + u * (-2.0 + u * (24.0 - u * 720.0));
    }
    const auto [si, ci] = sf::si_ci(a);
    return a * (ci * std::sin(a) - si * std::cos(a));
}

double h_function_numeric(double z, double xi, const DensitySpec& density,
                          const ChannelModel& ch, double quad_tol) {
    if (z < 0.0 || xi < 0.0) throw model_error("h_function_numeric: z, xi >= 0");
    if (xi == 0.0 || z == 0.0) return 0.0;
    const double gz_over_xi = 1.0 / (xi * pathloss(z, ch));
    auto u = [&](double r) {
        const double gr = 1.0 / (ch.alpha1 + ch.alpha2 * std::pow(r, ch.delta));
        return gr / (gr + gz_over_xi);
    };
    if (density.uniform) {
        // 2 pi int u(r) r dr; transition radius where g(r) = g(z)/xi
        if (ch.delta <= 2.0)
            throw model_error("h_function_numeric: uniform density needs delta > 2");
        double rc = z;
        if (ch.alpha1 == 0.0) rc = z * std::pow(xi, 1.0 / ch.delta);
        auto f = [&](double r) { return 2.0 * kPi * u(r) * r; };
        return quad::integrate_to_inf(f, 0.0, std::max(rc, 1e-6), quad_tol);
    }
    const double v = density.variance;
    auto f = [&](double r) { return u(r) * (r / v) * std::exp(-0.5 * r * r / v); };
    return quad::integrate(f, 0.0, 12.0 * std::sqrt(v), quad_tol, 1e-300);
}

namespace {

// Theorem-1 factor pieces shared by the per-AP and coverage paths.
struct Theorem1Terms {
    double noise_coeff;                 // N gamma / (Omega P_i)
    // per (class, j): lambda_k * u_kj and the H(z,1,xi) closed-form pieces
    struct Inter {
        double weight;  // lambda_k * u_hat_{k,j}
        double xi;
    };
    std::vector<Inter> inter;
    struct Intra {
        double uh;
        double xi;
        int j;
    };
    std::vector<Intra> intra;
    double sigma_i;
};

Theorem1Terms collect_terms(int interest_id, const Scenario& sc) {
    if (sc.channel.m != 1)
        throw model_error(
            "success_prob_at: closed form requires m = 1 (use the Monte Carlo "
            "simulator or the finite-difference path for m > 1)");
    const int idx = sc.index_of(interest_id);
    const TrafficClass& ti = sc.classes[idx];
    Theorem1Terms t;
    t.noise_coeff = noise_power(sc.channel, ti) * sc.channel.gamma_th /
                    (sc.channel.omega * ti.tx_power);
    t.sigma_i = ti.sigma_scatter;
    for (const TrafficClass& tc : sc.classes) {
        const ActivityFactors af = activity_factors(tc, sc.network);
        for (int j = 1; j <= 2; ++j) {
            const double uh = activity_of(af, j);
            const double q = code_gain(sc.network, j);
            if (uh == 0.0) continue;
            t.inter.push_back({tc.lambda_parent * uh,
                               q * tc.tx_power * sc.channel.gamma_th /
                                   (sc.channel.omega * ti.tx_power)});
        }
    }
    const ActivityFactors afi = activity_factors(ti, sc.network);
    for (int j = 1; j <= 2; ++j) {
        const double uh = activity_of(afi, j);
        if (uh == 0.0) continue;
        t.intra.push_back({uh,
                           code_gain(sc.network, j) * sc.channel.gamma_th /
                               sc.channel.omega,
                           j});
    }
    return t;
}

double theorem1_ps(double z, const Theorem1Terms& t, const Scenario& sc,
                   const SuccessModel& sm) {
    const double pn = std::exp(-t.noise_coeff / pathloss(z, sc.channel));
    double inter_exp = 0.0;
    for (const auto& it : t.inter) {
        const double h = sc.channel.pure_power_law()
                             ? h_function_point(z, it.xi, sc.channel)
                             : h_function_numeric(z, it.xi, DensitySpec::unit(),
                                                  sc.channel, sm.quad_tol);
        inter_exp += it.weight * h;
    }
    double intra_exp = 0.0;
    for (const auto& it : t.intra) {
        double h;
        if (sm.remark1_shortcut) {
            h = (it.j == 2) ? 1.0 : 0.0;
        } else if (sc.channel.delta == 4.0 && sc.channel.pure_power_law()) {
            h = h_function_cluster(z, it.xi, t.sigma_i, sc.channel);
        } else {
            h = h_function_numeric(z, it.xi,
                                   DensitySpec::normal(2.0 * t.sigma_i * t.sigma_i),
                                   sc.channel, sm.quad_tol);
        }
        intra_exp += it.uh * h;
    }
    return pn * std::exp(-inter_exp - intra_exp);
}

}  // namespace

double success_prob_at(double z, int interest_id, const Scenario& sc,
                       const SuccessModel& sm) {
    if (!(z > 0.0)) throw model_error("success_prob_at: z > 0 required");
    return theorem1_ps(z, collect_terms(interest_id, sc), sc, sm);
}

double success_prob_exact_m1(double z, int interest_id, const Scenario& sc,
                             const SuccessModel& sm) {
    if (sc.channel.m != 1) throw model_error("success_prob_exact_m1: requires m = 1");
    const TrafficClass& ti = sc.classes[sc.index_of(interest_id)];
    const double s = sc.channel.gamma_th * sc.channel.m /
                     (sc.channel.omega * ti.tx_power * pathloss(z, sc.channel));
    return laplace_total(s, sc, interest_id, sm) *
           std::exp(-s * noise_power(sc.channel, ti));
}

double success_prob_fd(double z, int interest_id, const Scenario& sc,
                       const SuccessModel& sm) {
    const int m = sc.channel.m;
    if (m > 4) throw model_error("success_prob_fd: m <= 4 supported");
    const TrafficClass& ti = sc.classes[sc.index_of(interest_id)];
    const double s0 = sc.channel.gamma_th * m /
                      (sc.channel.omega * ti.tx_power * pathloss(z, sc.channel));
    const double npow = noise_power(sc.channel, ti);
    auto F = [&](double s) {
        return laplace_total(s, sc, interest_id, sm) * std::exp(-s * npow);
    };
    auto derivative = [&](int nu, double h) {
        // central difference of order nu
        double sum = 0.0;
        for (int k = 0; k <= nu; ++k) {
            double c = 1.0;
            for (int i = 0; i < k; ++i) c *= static_cast<double>(nu - i) / (i + 1);
            const double x = s0 + (0.5 * nu - k) * h;
            sum += ((k % 2) ? -c : c) * F(x);
        }
        return sum / std::pow(h, nu);
    };
    double ps = 0.0, fact = 1.0;
    for (int nu = 0; nu < m; ++nu) {
        if (nu > 0) fact *= nu;
        double d;
        if (nu == 0) {
            d = F(s0);
        } else {
            const double h = s0 * 1e-4 * nu;
            const double d1 = derivative(nu, h);
            const double d2 = derivative(nu, 0.5 * h);
            d = (4.0 * d2 - d1) / 3.0;  // Richardson, O(h^4)
        }
        ps += ((nu % 2) ? -1.0 : 1.0) / fact * d;
    }
    return std::clamp(ps, 0.0, 1.0);
}

double nearest_ap_pdf(double r, int ell, double lambda_ap) {
    if (!(r > 0.0) || ell < 1) throw model_error("nearest_ap_pdf: r > 0, ell >= 1");
    const double a = lambda_ap * kPi * r * r;
    double fact = 1.0;
    for (int i = 2; i < ell; ++i) fact *= i;
    return std::exp(-a) * 2.0 * std::pow(a, ell) / (r * fact);
}

double coverage_prob(int interest_id, const Scenario& sc, const SuccessModel& sm) {
    const Theorem1Terms t = collect_terms(interest_id, sc);
    const double lap = sc.network.lambda_ap * kPi;
    double miss_product = 1.0;
    for (int ell = 1; ell <= sc.network.l_max; ++ell) {
        auto f = [&](double r) {
            return (1.0 - theorem1_ps(r, t, sc, sm)) * nearest_ap_pdf(r, ell,
                                                                      sc.network.lambda_ap);
        };
        const double scale = std::sqrt(static_cast<double>(ell) / lap);
        const double miss = quad::integrate_to_inf(f, 0.0, 2.0 * scale, sm.quad_tol);
        miss_product *= std::clamp(miss, 0.0, 1.0);
    }
    return 1.0 - miss_product;
}

Theorem3Aux theorem3_aux(int interest_id, const Scenario& sc) {
    const int idx = sc.index_of(interest_id);
    const TrafficClass& ti = sc.classes[idx];
    const double lap = sc.network.lambda_ap * kPi;
    const double csc_half_pi = 1.0;  // csc(pi/2)
    const double coef = 0.5 * kPi * kPi * csc_half_pi;

    double c_sum = 0.0;  // interference part of X2
    double d1 = 0.0;
    for (const TrafficClass& tc : sc.classes) {
        const ActivityFactors af = activity_factors(tc, sc.network);
        for (int j = 1; j <= 2; ++j) {
            const double uh = activity_of(af, j);
            const double q = code_gain(sc.network, j);
            if (uh == 0.0 || q == 0.0) continue;
            c_sum += tc.lambda_parent * uh *
                     std::sqrt(sc.channel.gamma_th * q * tc.tx_power /
                               (sc.channel.omega * ti.tx_power)) *
                     coef;
        }
        d1 += tc.lambda_parent * af.diff_code *
              std::sqrt(tc.tx_power * sc.channel.gamma_th / sc.channel.omega) * coef;
    }
    const ActivityFactors afi = activity_factors(ti, sc.network);
    Theorem3Aux aux{};
    aux.x1 = noise_power(sc.channel, ti) * sc.channel.gamma_th * sc.channel.alpha2 /
             (sc.channel.omega * ti.tx_power);
    aux.x2 = c_sum + lap;
    aux.x3 = aux.x1 > 0.0 ? aux.x2 / (2.0 * std::sqrt(aux.x1)) : 0.0;
    aux.x0 = lap * std::exp(-afi.diff_code);
    aux.d0 = 0.5 * std::sqrt(kPi) * lap * std::exp(-afi.diff_code);
    aux.d1 = d1;
    return aux;
}

double coverage_prob_theorem3(int interest_id, const Scenario& sc) {
    if (sc.channel.m != 1) throw model_error("coverage_prob_theorem3: requires m = 1");
    if (sc.channel.delta != 4.0 || !sc.channel.pure_power_law())
        throw model_error("coverage_prob_theorem3: requires g = alpha r^-4");
    if (sc.network.l_max > 2)
        throw model_error("coverage_prob_theorem3: l_max <= 2 supported");
    const Theorem3Aux aux = theorem3_aux(interest_id, sc);
    const double lap = sc.network.lambda_ap * kPi;
    const double e_intra = aux.x0 / lap;  // exp(-u_i2)

    double miss_product = 1.0;
    double fact = 1.0;
    for (int ell = 1; ell <= sc.network.l_max; ++ell) {
        if (ell >= 2) fact *= (ell - 1);
        double term;
        if (aux.x1 == 0.0) {
            term = std::pow(lap / aux.x2, ell) * e_intra;
        } else {
            term = std::pow(lap, ell) / fact * e_intra *
                   std::pow(aux.x1, -0.5 * ell) * sf::g_tail_scaled(aux.x3, ell);
        }
        miss_product *= 1.0 - std::clamp(term, 0.0, 1.0);
    }
    return 1.0 - miss_product;
}

double outage_prob(const TrafficClass& tc, double ps) {
    if (!(ps >= 0.0 && ps <= 1.0)) throw model_error("outage_prob: ps in [0,1]");
    return std::pow(1.0 - ps, static_cast<double>(tc.replicas) * tc.max_attempts);
}

double expected_attempts(const TrafficClass& tc, double ps) {
    if (!(ps >= 0.0 && ps <= 1.0)) throw model_error("expected_attempts: ps in [0,1]");
    const double q = std::pow(1.0 - ps, static_cast<double>(tc.replicas));
    double sum = 0.0, qpow = 1.0;
    for (int j = 1; j <= tc.max_attempts; ++j) {
        sum += j * (1.0 - q) * qpow;
        qpow *= q;
    }
    return sum;
}

double expected_attempts_all_fail(const TrafficClass& tc, double ps) {
    const double q = std::pow(1.0 - ps, static_cast<double>(tc.replicas));
    double qpow = 1.0;
    for (int j = 0; j < tc.max_attempts; ++j) qpow *= q;
    return expected_attempts(tc, ps) + tc.max_attempts * qpow;
}

double battery_lifetime(int interest_id, const Scenario& sc, double ps,
                        bool all_fail_variant) {
    const int idx = sc.index_of(interest_id);
    const TrafficClass& tc = sc.classes[idx];
    const EnergyModel& em = sc.energy[idx];
    const double beta = all_fail_variant ? expected_attempts_all_fail(tc, ps)
                                         : expected_attempts(tc, ps);
    const double denom =
        em.e_static +
        beta * (em.e_listen + tc.replicas * (em.eta * tc.tx_power + em.p_circuit) *
                                  tc.tx_time);
    if (!(denom > 0.0)) throw model_error("battery_lifetime: zero energy per period");
    return em.e0 * tc.report_period / denom;
}

Scenario with_policy(const Scenario& sc, int class_index, int replicas, double tx_power) {
    Scenario out = sc;
    out.classes[class_index].replicas = replicas;
    out.classes[class_index].tx_power = tx_power;
    return out;
}

}  // namespace lpwa
