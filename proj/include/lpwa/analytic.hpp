#pragma once

#include <utility>

#include "lpwa/scenario.hpp"

namespace lpwa {

enum class SuccessMethod { theorem1_per_ap, numerical_eq12, theorem3_closed_form, simplified_eq19 };

// Numerical controls for the analytic engine. trunc_radius = 0 selects
// adaptive truncation (geometric tail segments until converged); a positive
// value hard-caps the radial integrals instead. remark1_shortcut replaces the
// own-cluster H factor by 1{j = diff-code}, the closed-form route used by the
// Theorem-3 expressions.
struct SuccessModel {
    SuccessMethod method = SuccessMethod::theorem1_per_ap;
    double quad_tol = 1e-8;
    double trunc_radius = 0.0;
    bool remark1_shortcut = false;
};

// Intermediates of the closed-form coverage expression and the power-control
// reduction. x0 is the l = 1 value of (lambda_a pi)^l / (l-1)! * exp(-u_i2).
struct Theorem3Aux {
    double x0, x1, x2, x3;
    double d0, d1;
};

double nakagami_pdf(double q, const ChannelModel& ch);

// E[exp(-s * scale * h)] for Nakagami-m power fading h.
double laplace_fading(double s, double scale, const ChannelModel& ch);

double laplace_inter_cluster(double s, const Scenario& sc, int interest_id,
                             const SuccessModel& sm = {});
double laplace_intra_cluster(double s, const Scenario& sc, int interest_id,
                             const SuccessModel& sm = {});
double laplace_total(double s, const Scenario& sc, int interest_id,
                     const SuccessModel& sm = {});

// H(z, 1, xi) for g = alpha r^-delta (requires alpha1 = 0, delta > 2).
double h_function_point(double z, double xi, const ChannelModel& ch);

// H(z, f*, xi) for delta = 4 and Gaussian scatter of std-dev sigma,
// f* = conv(f, f). Closed form in sine/cosine integrals.
double h_function_cluster(double z, double xi, double sigma, const ChannelModel& ch);

// Either the unit density (interference field) or an isotropic normal with
// the given per-axis variance (cluster offset density).
struct DensitySpec {
    bool uniform = true;
    double variance = 0.0;
    static DensitySpec unit() { return {true, 0.0}; }
    static DensitySpec normal(double variance) { return {false, variance}; }
};

double h_function_numeric(double z, double xi, const DensitySpec& density,
                          const ChannelModel& ch, double quad_tol = 1e-9);

// Per-AP success probability at link distance z (Rayleigh closed form).
double success_prob_at(double z, int interest_id, const Scenario& sc,
                       const SuccessModel& sm = {});

// Same quantity through the full nested Laplace functionals (no cluster
// linearization), m = 1 only.
double success_prob_exact_m1(double z, int interest_id, const Scenario& sc,
                             const SuccessModel& sm = {});

// Experimental general-m path: finite-difference derivatives of the Laplace
// transform (Richardson-extrapolated), m <= 4. Low accuracy for m >= 3.
double success_prob_fd(double z, int interest_id, const Scenario& sc,
                       const SuccessModel& sm = {});

double nearest_ap_pdf(double r, int ell, double lambda_ap);

// Multi-AP coverage: 1 - prod_l int (1 - p_s(r)) P_dl(r) dr.
double coverage_prob(int interest_id, const Scenario& sc, const SuccessModel& sm = {});

// Closed-form coverage for delta = 4, m = 1, l_max <= 2.
double coverage_prob_theorem3(int interest_id, const Scenario& sc);
Theorem3Aux theorem3_aux(int interest_id, const Scenario& sc);

double outage_prob(const TrafficClass& tc, double ps);

// Mean transmission rounds per report. The plain form counts successful
// reports only; the all_fail variant adds the B * q^B mass of reports that
// exhaust every attempt (what an energy ledger actually spends).
double expected_attempts(const TrafficClass& tc, double ps);
double expected_attempts_all_fail(const TrafficClass& tc, double ps);

double battery_lifetime(int interest_id, const Scenario& sc, double ps,
                        bool all_fail_variant = false);

// Scenario copy with the interest-class policy (replicas, tx power) replaced;
// used by sweeps and the operation optimizer.
Scenario with_policy(const Scenario& sc, int class_index, int replicas, double tx_power);

}  // namespace lpwa
