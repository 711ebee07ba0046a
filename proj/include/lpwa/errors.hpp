#pragma once

#include <stdexcept>
#include <string>

namespace lpwa {

// Scenario files, CLI overrides, malformed units.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Adaptive integration did not reach the requested tolerance.
struct quadrature_error : std::runtime_error {
    explicit quadrature_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An expression was evaluated outside its validity domain (m != 1,
// wrong pathloss exponent, singular inputs, ...).
struct model_error : std::runtime_error {
    explicit model_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lpwa
