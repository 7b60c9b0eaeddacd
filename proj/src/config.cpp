// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/config.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <initializer_list>
#include <string_view>
#include <utility>

namespace beamsim {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string &message)
{
    throw ConfigError("config: " + message);
}

void check_keys(const json &obj, const std::string &prefix,
                std::initializer_list<std::string_view> allowed)
{
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (std::string_view key : allowed)
            if (key == it.key()) {
                known = true;
                break;
            }
        if (!known)
            fail("unknown key \"" + prefix + it.key() + "\"");
    }
}

double as_number(const json &value, const std::string &path)
{
    if (!value.is_number())
        fail("\"" + path + "\" must be a number");
    const double v = value.get<double>();
    if (!std::isfinite(v))
        fail("\"" + path + "\" must be finite");
    return v;
}

double number_or(const json &obj, const char *key, const std::string &prefix, double fallback)
{
    if (!obj.contains(key))
        return fallback;
    return as_number(obj.at(key), prefix + key);
}

int integer_or(const json &obj, const char *key, const std::string &prefix, int fallback)
{
    if (!obj.contains(key))
        return fallback;
    const json &value = obj.at(key);
    if (!value.is_number_integer())
        fail("\"" + prefix + key + "\" must be an integer");
    return value.get<int>();
}

double required_number(const json &obj, const char *key, const std::string &prefix)
{
    if (!obj.contains(key))
        fail("\"" + prefix + key + "\" is required");
    return as_number(obj.at(key), prefix + key);
}

Position parse_position(const json &obj, const std::string &prefix)
{
    if (!obj.is_object())
        fail("\"" + prefix.substr(0, prefix.size() - 1) + "\" must be an object");
    check_keys(obj, prefix, {"east_m", "north_m", "height_m"});

    Position p;
    p.east = required_number(obj, "east_m", prefix);
    p.north = required_number(obj, "north_m", prefix);
    p.height = number_or(obj, "height_m", prefix, 1.80);
    if (p.height < 0.0)
        fail("\"" + prefix + "height_m\" must be non-negative");
    return p;
}

AntennaArray parse_array_block(const json &obj)
{
    check_keys(obj, "array.", {"peak_gain_dbi", "half_power_beamwidth_deg", "floor_gain_dbi",
                               "omni_gain_dbi"});
    const double peak = number_or(obj, "peak_gain_dbi", "array.", 11.0);
    const double hpbw = number_or(obj, "half_power_beamwidth_deg", "array.", 45.0);
    const double floor = number_or(obj, "floor_gain_dbi", "array.", -21.0);
    const double omni = number_or(obj, "omni_gain_dbi", "array.", 2.0);
    try {
        return AntennaArray::with_uniform_elements(peak, hpbw, floor, omni);
    } catch (const std::invalid_argument &e) {
        fail(std::string("\"array\": ") + e.what());
    }
}

void parse_switch_block(const json &obj, SwitchPolicy &policy, SwitchModel &model)
{
    check_keys(obj, "switch.", {"activation_halfwidth_deg", "latency_s", "insertion_loss_db",
                                "isolation_db"});
    policy.activation_halfwidth_deg =
        number_or(obj, "activation_halfwidth_deg", "switch.", policy.activation_halfwidth_deg);
    if (!(policy.activation_halfwidth_deg > 0.0) || policy.activation_halfwidth_deg > 180.0)
        fail("\"switch.activation_halfwidth_deg\" must be in (0, 180]");

    model.latency_s = number_or(obj, "latency_s", "switch.", model.latency_s);
    if (model.latency_s < 0.0)
        fail("\"switch.latency_s\" must be non-negative");
    model.insertion_loss_db =
        number_or(obj, "insertion_loss_db", "switch.", model.insertion_loss_db);
    if (model.insertion_loss_db < 0.0)
        fail("\"switch.insertion_loss_db\" must be non-negative");
    model.isolation_db = number_or(obj, "isolation_db", "switch.", model.isolation_db);
}

DominantPathParams parse_propagation_block(const json &obj)
{
    check_keys(obj, "propagation.", {"diffraction_penalty_db", "max_diffractions"});
    DominantPathParams params;
    params.diffraction_penalty_db =
        number_or(obj, "diffraction_penalty_db", "propagation.", params.diffraction_penalty_db);
    if (params.diffraction_penalty_db < 0.0)
        fail("\"propagation.diffraction_penalty_db\" must be non-negative");
    params.max_diffractions =
        integer_or(obj, "max_diffractions", "propagation.", params.max_diffractions);
    if (params.max_diffractions < 0)
        fail("\"propagation.max_diffractions\" must be non-negative");
    return params;
}

Environment parse_environment(const json &obj)
{
    check_keys(obj, "environment.", {"obstacles"});
    std::vector<Obstacle> obstacles;
    if (obj.contains("obstacles")) {
        const json &list = obj.at("obstacles");
        if (!list.is_array())
            fail("\"environment.obstacles\" must be an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string prefix = "environment.obstacles[" + std::to_string(i) + "].";
            const json &entry = list[i];
            if (!entry.is_object())
                fail("\"environment.obstacles[" + std::to_string(i) + "]\" must be an object");
            check_keys(entry, prefix, {"name", "transmission_loss_db", "footprint"});

            Obstacle obstacle;
            if (entry.contains("name")) {
                if (!entry.at("name").is_string())
                    fail("\"" + prefix + "name\" must be a string");
                obstacle.name = entry.at("name").get<std::string>();
            }
            obstacle.transmission_loss_db =
                number_or(entry, "transmission_loss_db", prefix, obstacle.transmission_loss_db);

            if (!entry.contains("footprint"))
                fail("\"" + prefix + "footprint\" is required");
            const json &fp = entry.at("footprint");
            if (!fp.is_array())
                fail("\"" + prefix + "footprint\" must be an array of [east, north] pairs");
            for (std::size_t k = 0; k < fp.size(); ++k) {
                const std::string vertex = prefix + "footprint[" + std::to_string(k) + "]";
                const json &pair = fp[k];
                if (!pair.is_array() || pair.size() != 2)
                    fail("\"" + vertex + "\" must be an [east, north] pair");
                obstacle.footprint.push_back(
                    {as_number(pair[0], vertex + "[0]"), as_number(pair[1], vertex + "[1]"), 0.0});
            }
            obstacles.push_back(std::move(obstacle));
        }
    }
    try {
        return Environment(std::move(obstacles));
    } catch (const std::invalid_argument &e) {
        fail(std::string("\"environment\": ") + e.what());
    }
}

std::vector<TrajectorySample> parse_trajectory(const json &list)
{
    if (!list.is_array())
        fail("\"trajectory\" must be an array");

    struct RawSample
    {
        Position position;
        std::optional<double> time_s;
        std::optional<double> heading_deg;
    };

    std::vector<RawSample> raw;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string prefix = "trajectory[" + std::to_string(i) + "].";
        const json &entry = list[i];
        if (!entry.is_object())
            fail("\"trajectory[" + std::to_string(i) + "]\" must be an object");
        check_keys(entry, prefix, {"east_m", "north_m", "height_m", "time_s", "heading_deg"});

        RawSample s;
        s.position.east = required_number(entry, "east_m", prefix);
        s.position.north = required_number(entry, "north_m", prefix);
        s.position.height = number_or(entry, "height_m", prefix, 1.80);
        if (s.position.height < 0.0)
            fail("\"" + prefix + "height_m\" must be non-negative");
        if (entry.contains("time_s"))
            s.time_s = as_number(entry.at("time_s"), prefix + "time_s");
        if (entry.contains("heading_deg"))
            s.heading_deg = as_number(entry.at("heading_deg"), prefix + "heading_deg");
        raw.push_back(s);
    }

    std::vector<TrajectorySample> samples;
    samples.reserve(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        TrajectorySample sample;
        sample.index = static_cast<int>(i) + 1;
        sample.position = raw[i].position;

        sample.time_s = raw[i].time_s.value_or(i == 0 ? 0.0 : samples[i - 1].time_s + 1.0);
        if (i > 0 && sample.time_s < samples[i - 1].time_s)
            fail("\"trajectory[" + std::to_string(i) + "].time_s\" must be non-decreasing");

        if (raw[i].heading_deg) {
            sample.heading = Angle(*raw[i].heading_deg);
        } else {
            const bool has_next =
                i + 1 < raw.size() &&
                horizontal_distance(raw[i].position, raw[i + 1].position) > 0.0;
            if (has_next)
                sample.heading = bearing(raw[i].position, raw[i + 1].position);
            else if (i > 0)
                sample.heading = samples[i - 1].heading;
            else
                fail("\"trajectory[0].heading_deg\" is required when it cannot be derived "
                     "from a following sample");
        }
        samples.push_back(sample);
    }
    return samples;
}

CoverageSpec parse_coverage(const json &obj)
{
    if (!obj.is_object())
        fail("\"coverage\" must be an object");
    check_keys(obj, "coverage.",
               {"tx", "heading_deg", "selection", "origin_east_m", "origin_north_m",
                "cells_east", "cells_north", "cell_size_m", "rx_height_m"});

    CoverageSpec spec;
    if (!obj.contains("tx"))
        fail("\"coverage.tx\" is required");
    spec.tx = parse_position(obj.at("tx"), "coverage.tx.");
    spec.heading = Angle(number_or(obj, "heading_deg", "coverage.", 0.0));
    if (obj.contains("selection")) {
        if (!obj.at("selection").is_string())
            fail("\"coverage.selection\" must be a string");
        try {
            spec.selection = AntennaSelection::parse(obj.at("selection").get<std::string>());
        } catch (const std::invalid_argument &e) {
            fail(std::string("\"coverage.selection\": ") + e.what());
        }
    }

    spec.region.origin_east_m = required_number(obj, "origin_east_m", "coverage.");
    spec.region.origin_north_m = required_number(obj, "origin_north_m", "coverage.");
    spec.region.cells_east = integer_or(obj, "cells_east", "coverage.", 0);
    spec.region.cells_north = integer_or(obj, "cells_north", "coverage.", 0);
    if (spec.region.cells_east <= 0)
        fail("\"coverage.cells_east\" must be positive");
    if (spec.region.cells_north <= 0)
        fail("\"coverage.cells_north\" must be positive");
    spec.region.cell_size_m = number_or(obj, "cell_size_m", "coverage.", 1.0);
    if (!(spec.region.cell_size_m > 0.0))
        fail("\"coverage.cell_size_m\" must be positive");
    spec.region.rx_height_m = number_or(obj, "rx_height_m", "coverage.", 1.80);
    if (spec.region.rx_height_m < 0.0)
        fail("\"coverage.rx_height_m\" must be non-negative");
    return spec;
}

bool all_digits(std::string_view token)
{
    if (token.empty())
        return false;
    for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

void apply_override(json &doc, const std::string &assignment)
{
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        fail("override \"" + assignment + "\" must have the form key=value");

    const std::string path = assignment.substr(0, eq);
    const std::string value_text = assignment.substr(eq + 1);

    json value;
    try {
        value = json::parse(value_text);
    } catch (const json::parse_error &) {
        // Bare words become strings, e.g. mode=omni.
        value = value_text;
    }

    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (true) {
        const std::size_t dot = path.find('.', start);
        tokens.push_back(path.substr(start, dot - start));
        if (dot == std::string::npos)
            break;
        start = dot + 1;
    }
    for (const std::string &token : tokens)
        if (token.empty())
            fail("override key \"" + path + "\" has an empty segment");

    json *node = &doc;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        const std::string &token = tokens[i];
        if (node->is_array()) {
            if (!all_digits(token))
                fail("override key \"" + path + "\": \"" + token + "\" is not an array index");
            const std::size_t idx = std::stoul(token);
            if (idx >= node->size())
                fail("override key \"" + path + "\": index " + token + " is out of range");
            node = &(*node)[idx];
        } else if (node->is_object()) {
            if (!node->contains(token))
                (*node)[token] = json::object();
            node = &(*node)[token];
        } else {
            fail("override key \"" + path + "\": \"" + token + "\" does not address an object");
        }
    }

    const std::string &last = tokens.back();
    if (node->is_array()) {
        if (!all_digits(last))
            fail("override key \"" + path + "\": \"" + last + "\" is not an array index");
        const std::size_t idx = std::stoul(last);
        if (idx >= node->size())
            fail("override key \"" + path + "\": index " + last + " is out of range");
        (*node)[idx] = value;
    } else if (node->is_object()) {
        (*node)[last] = value;
    } else {
        fail("override key \"" + path + "\" does not address an object");
    }
}

} // namespace

std::vector<double> LoadedConfig::default_distances()
{
    std::vector<double> distances;
    distances.reserve(127);
    for (int d = 1; d <= 127; ++d)
        distances.push_back(static_cast<double>(d));
    return distances;
}

std::string default_config_text()
{
    return R"({"rsu_position": {"east_m": 0.0, "north_m": 0.0}})";
}

LoadedConfig parse_scenario_config(const std::string &text,
                                   const std::vector<std::string> &overrides)
{
    json doc;
    try {
        doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error &e) {
        fail(std::string("document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        fail("top level must be an object");

    for (const std::string &assignment : overrides)
        apply_override(doc, assignment);

    check_keys(doc, "",
               {"frequency_hz", "tx_power_dbm", "rx_gain_dbi", "rx_losses_db",
                "tx_extra_losses_db", "rssi_offset_db", "mode", "array", "switch",
                "propagation", "rsu_position", "environment", "trajectory", "coverage",
                "distances_m", "sweep_half_range_deg", "sweep_step_deg"});

    LoadedConfig config;
    ScenarioConfig &s = config.scenario;

    s.frequency_hz = number_or(doc, "frequency_hz", "", s.frequency_hz);
    if (!(s.frequency_hz > 0.0))
        fail("\"frequency_hz\" must be positive");
    s.tx_power_dbm = number_or(doc, "tx_power_dbm", "", s.tx_power_dbm);
    s.rx_gain_dbi = number_or(doc, "rx_gain_dbi", "", s.rx_gain_dbi);
    s.rx_losses_db = number_or(doc, "rx_losses_db", "", s.rx_losses_db);
    if (s.rx_losses_db < 0.0)
        fail("\"rx_losses_db\" must be non-negative");
    s.tx_extra_losses_db = number_or(doc, "tx_extra_losses_db", "", s.tx_extra_losses_db);
    if (s.tx_extra_losses_db < 0.0)
        fail("\"tx_extra_losses_db\" must be non-negative");
    s.rssi_offset_db = number_or(doc, "rssi_offset_db", "", s.rssi_offset_db);

    if (doc.contains("mode")) {
        if (!doc.at("mode").is_string())
            fail("\"mode\" must be \"switched\" or \"omni\"");
        const std::string mode = doc.at("mode").get<std::string>();
        if (mode == "switched")
            s.mode = RunMode::Switched;
        else if (mode == "omni")
            s.mode = RunMode::OmniOnly;
        else
            fail("\"mode\" must be \"switched\" or \"omni\"");
    }

    if (doc.contains("array"))
        s.array = parse_array_block(doc.at("array"));
    if (doc.contains("switch"))
        parse_switch_block(doc.at("switch"), s.policy, s.switch_model);
    if (doc.contains("propagation"))
        s.propagation = parse_propagation_block(doc.at("propagation"));

    if (!doc.contains("rsu_position"))
        fail("\"rsu_position\" is required");
    s.rsu_position = parse_position(doc.at("rsu_position"), "rsu_position.");

    if (doc.contains("environment"))
        s.environment = parse_environment(doc.at("environment"));
    if (doc.contains("trajectory"))
        s.trajectory = parse_trajectory(doc.at("trajectory"));
    if (doc.contains("coverage"))
        config.coverage = parse_coverage(doc.at("coverage"));

    if (doc.contains("distances_m")) {
        const json &list = doc.at("distances_m");
        if (!list.is_array())
            fail("\"distances_m\" must be an array");
        config.distances_m.clear();
        for (std::size_t i = 0; i < list.size(); ++i) {
            const double d =
                as_number(list[i], "distances_m[" + std::to_string(i) + "]");
            if (!(d > 0.0))
                fail("\"distances_m[" + std::to_string(i) + "]\" must be positive");
            config.distances_m.push_back(d);
        }
        if (config.distances_m.empty())
            fail("\"distances_m\" must not be empty");
    }

    config.sweep_half_range_deg =
        number_or(doc, "sweep_half_range_deg", "", config.sweep_half_range_deg);
    if (!(config.sweep_half_range_deg >= 0.0))
        fail("\"sweep_half_range_deg\" must be non-negative");
    config.sweep_step_deg = number_or(doc, "sweep_step_deg", "", config.sweep_step_deg);
    if (!(config.sweep_step_deg > 0.0))
        fail("\"sweep_step_deg\" must be positive");

    return config;
}

std::string serialize_config(const LoadedConfig &config)
{
    const ScenarioConfig &s = config.scenario;
    json doc;

    doc["frequency_hz"] = s.frequency_hz;
    doc["tx_power_dbm"] = s.tx_power_dbm;
    doc["rx_gain_dbi"] = s.rx_gain_dbi;
    doc["rx_losses_db"] = s.rx_losses_db;
    doc["tx_extra_losses_db"] = s.tx_extra_losses_db;
    doc["rssi_offset_db"] = s.rssi_offset_db;
    doc["mode"] = s.mode == RunMode::Switched ? "switched" : "omni";

    const SectorPattern &first = s.array.element(1);
    doc["array"] = {{"peak_gain_dbi", first.peak_gain_dbi},
                    {"half_power_beamwidth_deg", first.half_power_beamwidth_deg},
                    {"floor_gain_dbi", first.floor_gain_dbi},
                    {"omni_gain_dbi", s.array.omni().gain_dbi}};
    doc["switch"] = {{"activation_halfwidth_deg", s.policy.activation_halfwidth_deg},
                     {"latency_s", s.switch_model.latency_s},
                     {"insertion_loss_db", s.switch_model.insertion_loss_db},
                     {"isolation_db", s.switch_model.isolation_db}};
    doc["propagation"] = {{"diffraction_penalty_db", s.propagation.diffraction_penalty_db},
                          {"max_diffractions", s.propagation.max_diffractions}};
    doc["rsu_position"] = {{"east_m", s.rsu_position.east},
                           {"north_m", s.rsu_position.north},
                           {"height_m", s.rsu_position.height}};

    if (!s.environment.obstacles().empty()) {
        json list = json::array();
        for (const Obstacle &obstacle : s.environment.obstacles()) {
            json footprint = json::array();
            for (const Position &p : obstacle.footprint)
                footprint.push_back({p.east, p.north});
            list.push_back({{"name", obstacle.name},
                            {"transmission_loss_db", obstacle.transmission_loss_db},
                            {"footprint", footprint}});
        }
        doc["environment"] = {{"obstacles", list}};
    }

    if (!s.trajectory.empty()) {
        json list = json::array();
        for (const TrajectorySample &sample : s.trajectory)
            list.push_back({{"east_m", sample.position.east},
                            {"north_m", sample.position.north},
                            {"height_m", sample.position.height},
                            {"time_s", sample.time_s},
                            {"heading_deg", sample.heading.degrees()}});
        doc["trajectory"] = list;
    }

    if (config.coverage) {
        const CoverageSpec &spec = *config.coverage;
        doc["coverage"] = {{"tx",
                            {{"east_m", spec.tx.east},
                             {"north_m", spec.tx.north},
                             {"height_m", spec.tx.height}}},
                           {"heading_deg", spec.heading.degrees()},
                           {"selection", spec.selection.to_string()},
                           {"origin_east_m", spec.region.origin_east_m},
                           {"origin_north_m", spec.region.origin_north_m},
                           {"cells_east", spec.region.cells_east},
                           {"cells_north", spec.region.cells_north},
                           {"cell_size_m", spec.region.cell_size_m},
                           {"rx_height_m", spec.region.rx_height_m}};
    }

    doc["distances_m"] = config.distances_m;
    doc["sweep_half_range_deg"] = config.sweep_half_range_deg;
    doc["sweep_step_deg"] = config.sweep_step_deg;

    return doc.dump(2) + "\n";
}

} // namespace beamsim
