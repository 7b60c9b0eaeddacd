// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/scenario.hpp"

#include "beamsim/link_budget.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace beamsim {

RotationSweepTable gain_table(const AntennaArray &array, const Eigen::VectorXd &angles_deg)
{
    const Eigen::Index n = angles_deg.size();

    RotationSweepTable table;
    table.angles_deg = angles_deg;
    table.gain_dbi.resize(n, AntennaArray::element_count);
    table.best_element.resize(n);
    table.best_gain_dbi.resize(n);

    for (Eigen::Index k = 0; k < n; ++k) {
        const Angle theta(angles_deg(k));
        for (int id = 1; id <= AntennaArray::element_count; ++id)
            table.gain_dbi(k, id - 1) = sector_gain(array.element(id), theta);
        const int best = best_element_by_gain(array, theta);
        table.best_element(k) = best;
        table.best_gain_dbi(k) = table.gain_dbi(k, best - 1);
    }
    return table;
}

RotationSweepTable rotation_sweep(const AntennaArray &array, double half_range_deg,
                                  double step_deg)
{
    if (!(step_deg > 0.0))
        throw std::invalid_argument("rotation_sweep: step must be positive");
    if (!(half_range_deg >= 0.0))
        throw std::invalid_argument("rotation_sweep: half range must be non-negative");

    const auto n = static_cast<Eigen::Index>(
        std::llround(2.0 * half_range_deg / step_deg)) + 1;

    Eigen::VectorXd angles(n);
    for (Eigen::Index k = 0; k < n; ++k)
        angles(k) = -half_range_deg + static_cast<double>(k) * step_deg;
    return gain_table(array, angles);
}

namespace {

double sample_received_power(const ScenarioConfig &config, const Position &from,
                             const Position &to, const AntennaSelection &selection,
                             Angle theta_rel)
{
    const PathResult path =
        dominant_path_loss(config.environment, from, to, config.frequency_hz,
                           config.propagation);

    LinkBudget budget;
    budget.tx_power_dbm = config.tx_power_dbm;
    budget.tx_losses_db = config.tx_extra_losses_db +
                          (selection.is_element() ? config.switch_model.insertion_loss_db : 0.0);
    budget.tx_gain_dbi = array_gain(config.array, selection, theta_rel);
    budget.path_loss_fs_db = path.free_space_loss_db;
    budget.path_loss_div_db = path.excess_loss_db;
    budget.rx_gain_dbi = config.rx_gain_dbi;
    budget.rx_losses_db = config.rx_losses_db;
    return received_power_dbm(budget);
}

} // namespace

std::vector<DistanceRunRow> distance_run(const ScenarioConfig &config,
                                         const std::vector<double> &distances_m)
{
    if (!(config.frequency_hz > 0.0))
        throw std::invalid_argument("distance_run: frequency must be positive");

    std::vector<DistanceRunRow> rows;
    rows.reserve(distances_m.size() * (AntennaArray::element_count + 1));

    for (double d : distances_m) {
        if (!(d > 0.0))
            throw std::invalid_argument("distance_run: distances must be positive");

        const Position vehicle{0.0, 0.0, 1.80};
        const Position target{0.0, d, 1.80};
        const Angle straight_ahead(0.0);

        for (int id = 1; id <= AntennaArray::element_count; ++id) {
            const AntennaSelection sel = AntennaSelection::element(id);
            rows.push_back({d, sel,
                            sample_received_power(config, vehicle, target, sel, straight_ahead)});
        }
        const AntennaSelection omni = AntennaSelection::omni();
        rows.push_back({d, omni,
                        sample_received_power(config, vehicle, target, omni, straight_ahead)});
    }
    return rows;
}

std::vector<SampleResult> run_scenario(const ScenarioConfig &config)
{
    if (config.trajectory.empty())
        throw std::invalid_argument("run_scenario: trajectory must not be empty");
    if (!(config.frequency_hz > 0.0))
        throw std::invalid_argument("run_scenario: frequency must be positive");
    for (std::size_t i = 0; i < config.trajectory.size(); ++i) {
        if (config.trajectory[i].index != static_cast<int>(i) + 1)
            throw std::invalid_argument("run_scenario: trajectory indices must be contiguous from 1");
        if (i > 0 && config.trajectory[i].time_s < config.trajectory[i - 1].time_s)
            throw std::invalid_argument("run_scenario: trajectory times must be non-decreasing");
    }

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<SampleResult> results;
    results.reserve(config.trajectory.size());

    SwitchState state;
    for (const TrajectorySample &sample : config.trajectory) {
        SampleResult r;
        r.index = sample.index;
        r.position = sample.position;
        r.heading_deg = sample.heading.degrees();

        Angle theta_rel;
        try {
            theta_rel = relative_bearing(sample.position, sample.heading, config.rsu_position);
        } catch (const DegenerateGeometryError &) {
            r.theta_rel_deg = nan;
            r.selection = state.active();
            r.tx_gain_dbi = nan;
            r.p_r_dbm = nan;
            r.rssi_dbm = nan;
            r.degenerate = true;
            results.push_back(r);
            continue;
        }

        const AntennaSelection desired =
            config.mode == RunMode::Switched
                ? select_antenna(config.policy, config.array, theta_rel)
                : AntennaSelection::omni();
        state = apply_switch(state, config.switch_model, desired, sample.time_s);

        r.theta_rel_deg = theta_rel.degrees();
        r.selection = desired;
        r.tx_gain_dbi = array_gain(config.array, desired, theta_rel);
        r.p_r_dbm = sample_received_power(config, sample.position, config.rsu_position,
                                          desired, theta_rel);
        r.rssi_dbm = rssi_from_pr(r.p_r_dbm, config.rssi_offset_db);
        results.push_back(r);
    }
    return results;
}

double rssi_from_pr(double p_r_dbm, double offset_db)
{
    return p_r_dbm + offset_db;
}

ComparisonResult compare_runs(const std::vector<SampleResult> &switched,
                              const std::vector<SampleResult> &omni)
{
    if (switched.empty() || omni.empty())
        throw std::invalid_argument("compare_runs: runs must not be empty");
    if (switched.size() != omni.size())
        throw std::invalid_argument("compare_runs: runs must cover the same indices");

    ComparisonResult result;
    result.indices.reserve(switched.size());
    result.delta_rss_db.resize(static_cast<Eigen::Index>(switched.size()));

    double sum = 0.0;
    Eigen::Index finite = 0;
    for (std::size_t i = 0; i < switched.size(); ++i) {
        if (switched[i].index != omni[i].index)
            throw std::invalid_argument("compare_runs: runs must cover the same indices");
        const double delta = switched[i].rssi_dbm - omni[i].rssi_dbm;
        result.indices.push_back(switched[i].index);
        result.delta_rss_db(static_cast<Eigen::Index>(i)) = delta;
        if (std::isfinite(delta)) {
            sum += delta;
            ++finite;
        }
    }
    result.mean_delta_db = finite > 0 ? sum / static_cast<double>(finite)
                                      : std::numeric_limits<double>::quiet_NaN();
    return result;
}

} // namespace beamsim
