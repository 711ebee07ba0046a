#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpwa/model.hpp"

namespace lpwa {

// Unit of configuration, persistence, and experiment identity.
struct Scenario {
    std::string name;
    std::vector<TrafficClass> classes;
    ChannelModel channel;
    NetworkConfig network;
    std::vector<EnergyModel> energy;             // parallel to classes
    std::vector<double> reliability_target;      // outage bound per class
    McControls mc;
    int interest_class = 0;                      // class id
    ZGrid z_grid;

    void validate() const;
    int interest_index() const;
    const TrafficClass& interest() const { return classes[interest_index()]; }
    int index_of(int class_id) const;
};

// Loads a scenario document (JSON with explicit unit suffixes, see
// docs/scenario_format.md). `overrides` are dotted key=value assignments
// applied to the raw document before validation, e.g.
// "classes.0.tx_power=126 mW". Throws config_error on any problem.
Scenario load_scenario(const std::string& path,
                       const std::vector<std::string>& overrides = {});

Scenario scenario_from_json_text(const std::string& text,
                                 const std::vector<std::string>& overrides = {});

// Canonical resolved form (sorted keys, SI values) and its FNV-1a 64 hash.
// Two configurations that resolve to the same parameters hash identically,
// whether values came from the file or from --set overrides.
std::string canonical_json(const Scenario& s);
std::string scenario_hash(const Scenario& s);

std::uint64_t fnv1a64(const std::string& data);

}  // namespace lpwa
