// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#pragma once

#include "beamsim/antenna.hpp"
#include "beamsim/geometry.hpp"
#include "beamsim/propagation.hpp"
#include "beamsim/switching.hpp"

#include <Eigen/Dense>
#include <vector>

namespace beamsim {

struct TrajectorySample
{
    int index = 1;
    double time_s = 0.0;
    Position position;
    Angle heading;
};

enum class RunMode { Switched, OmniOnly };

// Full description of one trajectory experiment: the radio link constants,
// the vehicle-side array and switch, the propagation world, the roadside
// unit, and the measurement trajectory.
struct ScenarioConfig
{
    double frequency_hz = 5.9e9;
    double tx_power_dbm = 0.0;
    double rx_gain_dbi = 16.0;
    double rx_losses_db = 0.0;
    double tx_extra_losses_db = 0.0;
    double rssi_offset_db = -8.0;
    RunMode mode = RunMode::Switched;
    AntennaArray array = AntennaArray::standard();
    SwitchPolicy policy;
    SwitchModel switch_model;
    DominantPathParams propagation;
    Environment environment;
    Position rsu_position;
    std::vector<TrajectorySample> trajectory;
};

// One measurement point of a trajectory run. A sample coincident with the
// RSU position is marked degenerate: its radio fields are NaN and the
// selection reports the switch state left by the previous sample.
struct SampleResult
{
    int index = 0;
    Position position;
    double heading_deg = 0.0;
    double theta_rel_deg = 0.0;
    AntennaSelection selection = AntennaSelection::omni();
    double tx_gain_dbi = 0.0;
    double p_r_dbm = 0.0;
    double rssi_dbm = 0.0;
    bool degenerate = false;
};

struct RotationSweepTable
{
    Eigen::VectorXd angles_deg;
    Eigen::MatrixXd gain_dbi; // one row per angle, one column per element
    Eigen::VectorXi best_element;
    Eigen::VectorXd best_gain_dbi;
};

struct DistanceRunRow
{
    double d_m = 0.0;
    AntennaSelection selection = AntennaSelection::omni();
    double p_r_dbm = 0.0;
};

struct ComparisonResult
{
    std::vector<int> indices;
    Eigen::VectorXd delta_rss_db;
    double mean_delta_db = 0.0;
};

// Gain of every element at each given angle, with the per-angle best
// element. The angle acts directly as the relative bearing of a fixed
// receiver.
RotationSweepTable gain_table(const AntennaArray &array, const Eigen::VectorXd &angles_deg);

// gain_table over a symmetric rotation range sampled at a fixed step.
RotationSweepTable rotation_sweep(const AntennaArray &array, double half_range_deg,
                                  double step_deg);

// Received power over distance for each fixed selection (all 8 elements
// and the omni antenna), receiver straight ahead. Rows are ordered by
// distance, then ant1..ant8 followed by omni.
std::vector<DistanceRunRow> distance_run(const ScenarioConfig &config,
                                         const std::vector<double> &distances_m);

// Deterministic trajectory run: per sample, relative bearing toward the
// RSU, antenna selection per mode, switch state update, dominant-path
// loss, received power, and RSSI.
std::vector<SampleResult> run_scenario(const ScenarioConfig &config);

double rssi_from_pr(double p_r_dbm, double offset_db);

// Per-index RSSI difference (switched minus omni) and its arithmetic mean
// over the finite entries. Both runs must carry identical index sequences.
ComparisonResult compare_runs(const std::vector<SampleResult> &switched,
                              const std::vector<SampleResult> &omni);

} // namespace beamsim
