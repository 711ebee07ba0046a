#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lpwa {

// One IoT device type: radio parameters, traffic timing, PCP deployment,
// retransmission bound. All quantities SI.
struct TrafficClass {
    int id = 0;
    double lambda_parent = 0.0;  // parent-point density (1/m^2)
    double upsilon = 0.0;        // mean daughters per parent
    double sigma_scatter = 0.0;  // daughter scatter std-dev (m)
    double report_period = 0.0;  // T (s)
    double tx_time = 0.0;        // tau, per-replica transmission time (s)
    double signal_bw = 0.0;      // w (Hz)
    int replicas = 1;            // n
    double tx_power = 0.0;       // P (W)
    int max_attempts = 1;        // B
    bool in_phi = true;          // shares the semi-orthogonal code set

    void validate(double total_bw) const;
    double duty_cycle() const { return replicas * tx_time / report_period; }
};

// Pathloss gain(r) = 1 / (alpha1 + alpha2 r^delta) plus Nakagami-m power
// fading (spread omega), noise PSD, and the SINR decoding threshold.
struct ChannelModel {
    double alpha1 = 0.0;
    double alpha2 = 1.0;
    double delta = 4.0;
    int m = 1;
    double omega = 1.0;
    double noise_psd = 0.0;  // W/Hz
    double gamma_th = 1.0;   // linear

    void validate() const;
    bool pure_power_law() const { return alpha1 == 0.0; }
};

struct NetworkConfig {
    double total_bw = 0.0;   // W (Hz)
    double lambda_ap = 0.0;  // AP density (1/m^2)
    int code_count = 1;      // |codes|
    double rejection = 0.0;  // Q, cross-code power rejection factor in [0,1]
    int l_max = 1;           // nearest APs considered

    void validate() const;
    // Cell-edge reference distance for grid-equivalent AP deployment.
    double cell_edge_distance() const;
};

struct EnergyModel {
    double e0 = 0.0;         // battery budget (J)
    double e_static = 0.0;   // per reporting period (J)
    double e_listen = 0.0;   // per ACK-listening window (J)
    double p_circuit = 0.0;  // transmit-mode circuit power (W)
    double eta = 1.0;        // inverse PA efficiency, multiplies tx power

    void validate() const;
};

// Mean simultaneously-interfering devices per cluster, split by code status:
// same_code suffers no rejection, diff_code is scaled by Q.
struct ActivityFactors {
    double same_code = 0.0;
    double diff_code = 0.0;
    double total() const { return same_code + diff_code; }
};

struct McControls {
    double window_side = 0.0;  // observation window side (m)
    double guard = 0.0;        // device-field padding beyond the window (m)
    std::int64_t snapshots = 1;
    std::uint64_t seed = 1;
    bool antithetic = false;

    void validate(double sigma_max) const;
};

struct ZGrid {
    double z_min = 50.0;
    double z_max = 5000.0;
    int points = 40;

    std::vector<double> values() const;  // log-spaced
};

double pathloss(double dist, const ChannelModel& ch);

struct PathlossParams {
    double alpha1, alpha2, delta;
};

// Maps a dB law PL(x) = A + B log10(x/x0) onto the rational pathloss model.
// Rejects B <= 20 (delta <= 2 makes the interference integrals diverge).
PathlossParams from_db_pathloss(double intercept_db, double slope_db_per_decade,
                                double ref_dist);

ActivityFactors activity_factors(const TrafficClass& tc, const NetworkConfig& net);

// Receiver noise power matched to the class's signal bandwidth.
double noise_power(const ChannelModel& ch, const TrafficClass& tc);

}  // namespace lpwa
