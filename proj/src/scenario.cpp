#include "lpwa/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lpwa/errors.hpp"
#include "lpwa/units.hpp"

namespace lpwa {

using nlohmann::json;
using units::Kind;

namespace {

double qty(const json& obj, const std::string& key, Kind kind, const std::string& ctx,
           bool required = true, double fallback = 0.0) {
    if (!obj.contains(key)) {
        if (required) throw config_error(ctx + "." + key + ": missing field");
        return fallback;
    }
    const json& v = obj.at(key);
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return units::parse_quantity(v.get<std::string>(), kind, ctx + "." + key);
    throw config_error(ctx + "." + key + ": expected number or quantity string");
}

int integer(const json& obj, const std::string& key, const std::string& ctx,
            bool required = true, int fallback = 0) {
    if (!obj.contains(key)) {
        if (required) throw config_error(ctx + "." + key + ": missing field");
        return fallback;
    }
    if (!obj.at(key).is_number_integer())
        throw config_error(ctx + "." + key + ": expected integer");
    return obj.at(key).get<int>();
}

ChannelModel parse_channel(const json& j) {
    ChannelModel ch;
    const json& c = j.at("channel");
    if (c.contains("pathloss_db")) {
        const json& p = c.at("pathloss_db");
        auto params = from_db_pathloss(qty(p, "intercept_db", Kind::ratio, "pathloss_db"),
                                       qty(p, "slope_db_per_decade", Kind::ratio, "pathloss_db"),
                                       qty(p, "ref_dist", Kind::distance, "pathloss_db"));
        ch.alpha1 = params.alpha1;
        ch.alpha2 = params.alpha2;
        ch.delta = params.delta;
    } else if (c.contains("pathloss")) {
        const json& p = c.at("pathloss");
        ch.alpha1 = qty(p, "alpha1", Kind::ratio, "pathloss", false, 0.0);
        ch.alpha2 = qty(p, "alpha2", Kind::ratio, "pathloss");
        ch.delta = qty(p, "delta", Kind::ratio, "pathloss");
    } else {
        throw config_error("channel: need pathloss or pathloss_db section");
    }
    ch.m = integer(c, "nakagami_m", "channel", false, 1);
    ch.omega = qty(c, "omega", Kind::ratio, "channel", false, 1.0);
    ch.noise_psd = qty(c, "noise_psd", Kind::psd, "channel");
    ch.gamma_th = qty(c, "gamma_th", Kind::ratio, "channel", false, 1.0);
    return ch;
}

TrafficClass parse_class(const json& c, int pos) {
    const std::string ctx = "classes." + std::to_string(pos);
    TrafficClass tc;
    tc.id = integer(c, "id", ctx);
    tc.lambda_parent = qty(c, "lambda_parent", Kind::area_density, ctx);
    tc.upsilon = qty(c, "upsilon", Kind::ratio, ctx);
    tc.sigma_scatter = qty(c, "sigma_scatter", Kind::distance, ctx);
    tc.report_period = qty(c, "report_period", Kind::time, ctx);
    tc.tx_time = qty(c, "tx_time", Kind::time, ctx);
    tc.signal_bw = qty(c, "signal_bw", Kind::frequency, ctx);
    tc.replicas = integer(c, "replicas", ctx, false, 1);
    tc.tx_power = qty(c, "tx_power", Kind::power, ctx);
    tc.max_attempts = integer(c, "max_attempts", ctx, false, 1);
    tc.in_phi = c.value("in_phi", true);
    return tc;
}

EnergyModel parse_energy(const json& c, int pos) {
    const std::string ctx = "classes." + std::to_string(pos) + ".energy";
    if (!c.contains("energy")) throw config_error(ctx + ": missing section");
    const json& e = c.at("energy");
    EnergyModel em;
    em.e0 = qty(e, "e0", Kind::energy, ctx);
    em.e_static = qty(e, "e_static", Kind::energy, ctx);
    em.e_listen = qty(e, "e_listen", Kind::energy, ctx);
    em.p_circuit = qty(e, "p_circuit", Kind::power, ctx);
    em.eta = qty(e, "eta", Kind::ratio, ctx);
    return em;
}

void apply_override(json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw config_error("override '" + assignment + "': expected KEY=VALUE");
    const std::string key = assignment.substr(0, eq);
    const std::string value = assignment.substr(eq + 1);

    json* node = &doc;
    std::stringstream path(key);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(path, part, '.')) parts.push_back(part);
    if (parts.empty()) throw config_error("override '" + assignment + "': empty key");

    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool last = (i + 1 == parts.size());
        json* next = nullptr;
        if (node->is_array()) {
            std::size_t idx = 0;
            try {
                idx = std::stoul(parts[i]);
            } catch (...) {
                throw config_error("override '" + key + "': '" + parts[i] +
                                   "' is not an array index");
            }
            if (idx >= node->size())
                throw config_error("override '" + key + "': index out of range");
            next = &(*node)[idx];
        } else if (node->is_object() && node->contains(parts[i])) {
            next = &(*node)[parts[i]];
        } else {
            throw config_error("override '" + key + "': no such field '" + parts[i] + "'");
        }
        if (last) {
            // keep the existing representation: numbers stay numbers,
            // quantity strings stay strings (re-parsed by the loader)
            json parsed = json::parse(value, nullptr, false);
            if (next->is_string())
                *next = value;
            else if (!parsed.is_discarded() && (parsed.is_number() || parsed.is_boolean()))
                *next = parsed;
            else
                *next = value;
        }
        node = next;
    }
}

Scenario parse(json doc) {
    if (!doc.contains("schema_version") || doc.at("schema_version").get<int>() != 1)
        throw config_error("scenario: missing or unsupported schema_version (expected 1)");

    Scenario s;
    s.name = doc.value("name", "scenario");
    s.channel = parse_channel(doc);

    const json& net = doc.at("network");
    s.network.total_bw = qty(net, "total_bw", Kind::frequency, "network");
    s.network.lambda_ap = qty(net, "lambda_ap", Kind::area_density, "network");
    s.network.code_count = integer(net, "code_count", "network", false, 1);
    s.network.rejection = qty(net, "rejection", Kind::ratio, "network", false, 0.0);
    s.network.l_max = integer(net, "l_max", "network", false, 1);

    if (!doc.contains("classes") || !doc.at("classes").is_array() || doc.at("classes").empty())
        throw config_error("scenario: classes must be a non-empty array");
    int pos = 0;
    for (const json& c : doc.at("classes")) {
        s.classes.push_back(parse_class(c, pos));
        s.energy.push_back(parse_energy(c, pos));
        s.reliability_target.push_back(
            qty(c, "reliability_target", Kind::ratio, "classes." + std::to_string(pos),
                false, 0.01));
        ++pos;
    }
    s.interest_class = integer(doc, "interest_class", "scenario");

    const json& mc = doc.at("mc");
    s.mc.window_side = qty(mc, "window_side", Kind::distance, "mc");
    s.mc.guard = qty(mc, "guard", Kind::distance, "mc");
    s.mc.snapshots = static_cast<std::int64_t>(qty(mc, "snapshots", Kind::ratio, "mc"));
    s.mc.seed = static_cast<std::uint64_t>(qty(mc, "seed", Kind::ratio, "mc", false, 1.0));
    s.mc.antithetic = mc.value("antithetic", false);

    if (doc.contains("z_grid")) {
        const json& zg = doc.at("z_grid");
        s.z_grid.z_min = qty(zg, "min", Kind::distance, "z_grid");
        s.z_grid.z_max = qty(zg, "max", Kind::distance, "z_grid");
        s.z_grid.points = integer(zg, "points", "z_grid");
    }

    s.validate();
    return s;
}

}  // namespace

void Scenario::validate() const {
    if (classes.empty()) throw config_error("scenario: at least one class required");
    if (classes.size() != energy.size() || classes.size() != reliability_target.size())
        throw config_error("scenario: per-class sections out of sync");
    channel.validate();
    network.validate();
    double sigma_max = 0.0;
    for (const auto& tc : classes) {
        tc.validate(network.total_bw);
        sigma_max = std::max(sigma_max, tc.sigma_scatter);
    }
    for (const auto& em : energy) em.validate();
    for (double t : reliability_target)
        if (!(t > 0.0 && t <= 1.0))
            throw config_error("scenario: reliability_target must lie in (0,1]");
    mc.validate(sigma_max);
    index_of(interest_class);  // throws if unknown
    if (!(z_grid.z_min > 0.0 && z_grid.z_max > z_grid.z_min && z_grid.points >= 1))
        throw config_error("scenario: bad z_grid");
}

int Scenario::index_of(int class_id) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].id == class_id) return static_cast<int>(i);
    throw config_error("scenario: unknown class id " + std::to_string(class_id));
}

int Scenario::interest_index() const { return index_of(interest_class); }

Scenario load_scenario(const std::string& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open scenario file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return scenario_from_json_text(buf.str(), overrides);
}

Scenario scenario_from_json_text(const std::string& text,
                                 const std::vector<std::string>& overrides) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw config_error("scenario: invalid JSON");
    for (const auto& ov : overrides) apply_override(doc, ov);
    return parse(std::move(doc));
}

std::string canonical_json(const Scenario& s) {
    json doc;
    doc["schema_version"] = 1;
    doc["name"] = s.name;
    doc["channel"] = {{"alpha1", s.channel.alpha1}, {"alpha2", s.channel.alpha2},
                      {"delta", s.channel.delta},   {"nakagami_m", s.channel.m},
                      {"omega", s.channel.omega},   {"noise_psd", s.channel.noise_psd},
                      {"gamma_th", s.channel.gamma_th}};
    doc["network"] = {{"total_bw", s.network.total_bw}, {"lambda_ap", s.network.lambda_ap},
                      {"code_count", s.network.code_count},
                      {"rejection", s.network.rejection}, {"l_max", s.network.l_max}};
    doc["classes"] = json::array();
    for (std::size_t i = 0; i < s.classes.size(); ++i) {
        const TrafficClass& c = s.classes[i];
        const EnergyModel& e = s.energy[i];
        doc["classes"].push_back(
            {{"id", c.id},
             {"lambda_parent", c.lambda_parent},
             {"upsilon", c.upsilon},
             {"sigma_scatter", c.sigma_scatter},
             {"report_period", c.report_period},
             {"tx_time", c.tx_time},
             {"signal_bw", c.signal_bw},
             {"replicas", c.replicas},
             {"tx_power", c.tx_power},
             {"max_attempts", c.max_attempts},
             {"in_phi", c.in_phi},
             {"reliability_target", s.reliability_target[i]},
             {"energy",
              {{"e0", e.e0}, {"e_static", e.e_static}, {"e_listen", e.e_listen},
               {"p_circuit", e.p_circuit}, {"eta", e.eta}}}});
    }
    doc["interest_class"] = s.interest_class;
    doc["mc"] = {{"window_side", s.mc.window_side}, {"guard", s.mc.guard},
                 {"snapshots", s.mc.snapshots},     {"seed", s.mc.seed},
                 {"antithetic", s.mc.antithetic}};
    doc["z_grid"] = {{"min", s.z_grid.z_min}, {"max", s.z_grid.z_max},
                     {"points", s.z_grid.points}};
    return doc.dump();
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string scenario_hash(const Scenario& s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical_json(s))));
    return buf;
}

}  // namespace lpwa
