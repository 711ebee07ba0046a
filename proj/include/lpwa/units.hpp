#pragma once

#include <cmath>
#include <string>

namespace lpwa::units {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

// Unit families accepted in scenario files.
enum class Kind { power, energy, time, frequency, distance, area_density, psd, ratio };

// Parses "<number> <suffix>" into SI. A bare number string is taken as SI.
// Throws config_error with `field` in the message on unknown suffixes.
double parse_quantity(const std::string& text, Kind kind, const std::string& field);

const char* kind_name(Kind kind);

}  // namespace lpwa::units
