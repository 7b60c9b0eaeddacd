// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#pragma once

#include "beamsim/propagation.hpp"
#include "beamsim/scenario.hpp"

#include <iosfwd>
#include <string>

namespace beamsim {

// Fixed 4-decimal rendering; non-finite values print as "NaN".
std::string format_fixed(double value);

// theta_deg, element, gain_dbi
void write_sweep_csv(const RotationSweepTable &table, std::ostream &out);

// d_m, selection, p_r_dbm
void write_link_csv(const std::vector<DistanceRunRow> &rows, std::ostream &out);

// east_m, north_m, p_r_dbm at cell centers, north-up raster order
void write_coverage_csv(const CoverageGrid &grid, std::ostream &out);

// Semicolon-separated dBm rows, north-up, "NaN" for the not-computed cell
void write_coverage_raster(const CoverageGrid &grid, std::ostream &out);

// index, east_m, north_m, heading_deg, theta_rel_deg, selection,
// tx_gain_dbi, p_r_dbm, rssi_dbm
void write_run_csv(const std::vector<SampleResult> &results, std::ostream &out);

// index, delta_rss_db with a final "mean" row
void write_compare_csv(const ComparisonResult &comparison, std::ostream &out);

} // namespace beamsim
