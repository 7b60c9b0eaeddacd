// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#pragma once

#include "beamsim/scenario.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace beamsim {

class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Parameters of the coverage experiment: a fixed transmitter with one
// selected element and a grid of receiver cells.
struct CoverageSpec
{
    GridRegion region;
    Position tx;
    Angle heading;
    AntennaSelection selection = AntennaSelection::element(4);
};

// Everything a simulation command needs: the scenario proper plus the
// experiment-specific blocks.
struct LoadedConfig
{
    ScenarioConfig scenario;
    std::optional<CoverageSpec> coverage;
    std::vector<double> distances_m = default_distances();
    double sweep_half_range_deg = 60.0;
    double sweep_step_deg = 5.0;

    // 1 m raster out to the 127 m demonstrated link range.
    static std::vector<double> default_distances();
};

// Smallest document accepted by parse_scenario_config; used when no
// configuration file is given.
std::string default_config_text();

// Parses and validates a JSON configuration document (comments allowed).
// Overrides are dotted key=value assignments applied to the document
// before validation; they create missing intermediate objects. Unknown
// keys, malformed values, and invariant violations raise ConfigError
// naming the offending key. Trajectory headings and times are derived
// where omitted: heading from the bearing to the next sample (the last
// sample reuses the previous heading), time as the previous time plus one
// second.
LoadedConfig parse_scenario_config(const std::string &text,
                                   const std::vector<std::string> &overrides = {});

// Serializes a LoadedConfig back to a JSON document that parses to an
// equivalent configuration.
std::string serialize_config(const LoadedConfig &config);

} // namespace beamsim
