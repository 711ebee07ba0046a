#include "lpwa/units.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include "lpwa/errors.hpp"

namespace lpwa::units {

namespace {

struct Suffix {
    Kind kind;
    // scale applied to the numeric value; db flags select a log conversion instead
    double scale;
    enum class Log { none, db, dbm } log = Log::none;
};

const std::map<std::string, Suffix>& suffix_table() {
    using L = Suffix::Log;
    static const std::map<std::string, Suffix> table = {
        {"W", {Kind::power, 1.0}},
        {"mW", {Kind::power, 1e-3}},
        {"uW", {Kind::power, 1e-6}},
        {"dBm", {Kind::power, 0.0, L::dbm}},
        {"J", {Kind::energy, 1.0}},
        {"mJ", {Kind::energy, 1e-3}},
        {"s", {Kind::time, 1.0}},
        {"ms", {Kind::time, 1e-3}},
        {"min", {Kind::time, 60.0}},
        {"h", {Kind::time, 3600.0}},
        {"Hz", {Kind::frequency, 1.0}},
        {"kHz", {Kind::frequency, 1e3}},
        {"MHz", {Kind::frequency, 1e6}},
        {"m", {Kind::distance, 1.0}},
        {"km", {Kind::distance, 1e3}},
        {"/m2", {Kind::area_density, 1.0}},
        {"/km2", {Kind::area_density, 1e-6}},
        {"per_m2", {Kind::area_density, 1.0}},
        {"per_km2", {Kind::area_density, 1e-6}},
        {"W/Hz", {Kind::psd, 1.0}},
        {"dBm/Hz", {Kind::psd, 0.0, L::dbm}},
        {"dB", {Kind::ratio, 0.0, L::db}},
    };
    return table;
}

}  // namespace

const char* kind_name(Kind kind) {
    switch (kind) {
        case Kind::power: return "power";
        case Kind::energy: return "energy";
        case Kind::time: return "time";
        case Kind::frequency: return "frequency";
        case Kind::distance: return "distance";
        case Kind::area_density: return "area density";
        case Kind::psd: return "power spectral density";
        case Kind::ratio: return "ratio";
    }
    return "?";
}

double parse_quantity(const std::string& text, Kind kind, const std::string& field) {
    std::istringstream in(text);
    double value = 0.0;
    in >> value;
    if (in.fail())
        throw config_error(field + ": cannot parse number from '" + text + "'");
    std::string suffix;
    in >> suffix;
    if (suffix.empty()) return value;  // bare number in a string: SI

    auto it = suffix_table().find(suffix);
    if (it == suffix_table().end() || it->second.kind != kind)
        throw config_error(field + ": unknown " + std::string(kind_name(kind)) +
                           " unit '" + suffix + "' in '" + text + "'");
    const Suffix& s = it->second;
    switch (s.log) {
        case Suffix::Log::db: return db_to_linear(value);
        case Suffix::Log::dbm: return dbm_to_watt(value);
        default: return value * s.scale;
    }
}

}  // namespace lpwa::units
