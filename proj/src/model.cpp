#include "lpwa/model.hpp"

#include <cmath>
#include <numbers>

#include "lpwa/errors.hpp"

namespace lpwa {

namespace {
void require(bool ok, const std::string& what) {
    if (!ok) throw config_error(what);
}
}  // namespace

void TrafficClass::validate(double total_bw) const {
    require(lambda_parent > 0.0, "class " + std::to_string(id) + ": lambda_parent must be > 0");
    require(upsilon > 0.0, "class " + std::to_string(id) + ": upsilon must be > 0");
    require(sigma_scatter > 0.0, "class " + std::to_string(id) + ": sigma_scatter must be > 0");
    require(report_period > tx_time && tx_time > 0.0,
            "class " + std::to_string(id) + ": need T > tau > 0");
    require(signal_bw > 0.0 && signal_bw <= total_bw,
            "class " + std::to_string(id) + ": need 0 < w <= W");
    require(replicas >= 1, "class " + std::to_string(id) + ": replicas >= 1");
    require(max_attempts >= 1, "class " + std::to_string(id) + ": max_attempts >= 1");
    require(tx_power > 0.0, "class " + std::to_string(id) + ": tx_power must be > 0");
    require(duty_cycle() <= 1.0,
            "class " + std::to_string(id) + ": n*tau/T exceeds 1 (always-on device)");
}

void ChannelModel::validate() const {
    require(delta > 2.0 || alpha1 > 0.0, "channel: delta must exceed 2 for a pure power law");
    require(alpha2 > 0.0, "channel: alpha2 must be > 0");
    require(alpha1 >= 0.0, "channel: alpha1 must be >= 0");
    require(m >= 1, "channel: Nakagami m must be a positive integer");
    require(omega > 0.0, "channel: omega must be > 0");
    require(noise_psd >= 0.0, "channel: noise_psd must be >= 0");
    require(gamma_th > 0.0, "channel: gamma_th must be > 0");
}

void NetworkConfig::validate() const {
    require(total_bw > 0.0, "network: total_bw must be > 0");
    require(lambda_ap > 0.0, "network: lambda_ap must be > 0");
    require(code_count >= 1, "network: code_count >= 1");
    require(rejection >= 0.0 && rejection <= 1.0, "network: rejection in [0,1]");
    require(l_max >= 1, "network: l_max >= 1");
}

double NetworkConfig::cell_edge_distance() const {
    return std::sqrt(1.0 / (std::numbers::pi * lambda_ap));
}

void EnergyModel::validate() const {
    require(e0 > 0.0 && e_static > 0.0 && e_listen > 0.0 && p_circuit > 0.0,
            "energy: all energies/powers must be > 0");
    require(eta > 0.0, "energy: eta must be > 0");
}

void McControls::validate(double sigma_max) const {
    require(window_side > 0.0, "mc: window_side must be > 0");
    require(guard >= 5.0 * sigma_max, "mc: guard must be >= 5 * max scatter sigma");
    require(snapshots >= 1, "mc: snapshots >= 1");
}

std::vector<double> ZGrid::values() const {
    std::vector<double> v;
    v.reserve(points);
    if (points == 1) {
        v.push_back(z_min);
        return v;
    }
    const double step = std::log(z_max / z_min) / (points - 1);
    for (int i = 0; i < points; ++i) v.push_back(z_min * std::exp(step * i));
    return v;
}

double pathloss(double dist, const ChannelModel& ch) {
    if (dist < 0.0) throw model_error("pathloss: negative distance");
    if (ch.alpha1 == 0.0 && dist == 0.0)
        throw model_error("pathloss: singular at zero distance with alpha1 = 0");
    return 1.0 / (ch.alpha1 + ch.alpha2 * std::pow(dist, ch.delta));
}

PathlossParams from_db_pathloss(double intercept_db, double slope_db_per_decade,
                                double ref_dist) {
    if (slope_db_per_decade <= 20.0)
        throw config_error("pathloss_db: slope must exceed 20 dB/decade (delta > 2)");
    const double delta = slope_db_per_decade / 10.0;
    const double alpha2 = std::pow(10.0, intercept_db / 10.0) / std::pow(ref_dist, delta);
    return {0.0, alpha2, delta};
}

ActivityFactors activity_factors(const TrafficClass& tc, const NetworkConfig& net) {
    const double base = tc.upsilon * tc.duty_cycle() * (tc.signal_bw / net.total_bw);
    if (!tc.in_phi) return {0.0, base};
    const double codes = static_cast<double>(net.code_count);
    return {base / codes, base * (codes - 1.0) / codes};
}

double noise_power(const ChannelModel& ch, const TrafficClass& tc) {
    return ch.noise_psd * tc.signal_bw;
}

}  // namespace lpwa
