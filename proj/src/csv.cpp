// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace beamsim {

std::string format_fixed(double value)
{
    if (!std::isfinite(value))
        return "NaN";
    value += 0.0; // drops negative zero
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.4f", value);
    return buffer;
}

void write_sweep_csv(const RotationSweepTable &table, std::ostream &out)
{
    out << "theta_deg,element,gain_dbi\n";
    for (Eigen::Index k = 0; k < table.angles_deg.size(); ++k)
        for (int id = 1; id <= AntennaArray::element_count; ++id)
            out << format_fixed(table.angles_deg(k)) << ',' << id << ','
                << format_fixed(table.gain_dbi(k, id - 1)) << '\n';
}

void write_link_csv(const std::vector<DistanceRunRow> &rows, std::ostream &out)
{
    out << "d_m,selection,p_r_dbm\n";
    for (const DistanceRunRow &row : rows)
        out << format_fixed(row.d_m) << ',' << row.selection.to_string() << ','
            << format_fixed(row.p_r_dbm) << '\n';
}

void write_coverage_csv(const CoverageGrid &grid, std::ostream &out)
{
    out << "east_m,north_m,p_r_dbm\n";
    for (int iy = grid.cells_north() - 1; iy >= 0; --iy)
        for (int ix = 0; ix < grid.cells_east(); ++ix) {
            const Position center = grid.cell_center(ix, iy);
            out << format_fixed(center.east) << ',' << format_fixed(center.north) << ','
                << format_fixed(grid.value(ix, iy)) << '\n';
        }
}

void write_coverage_raster(const CoverageGrid &grid, std::ostream &out)
{
    for (int iy = grid.cells_north() - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < grid.cells_east(); ++ix) {
            if (ix > 0)
                out << ';';
            out << format_fixed(grid.value(ix, iy));
        }
        out << '\n';
    }
}

void write_run_csv(const std::vector<SampleResult> &results, std::ostream &out)
{
    out << "index,east_m,north_m,heading_deg,theta_rel_deg,selection,tx_gain_dbi,"
           "p_r_dbm,rssi_dbm\n";
    for (const SampleResult &r : results)
        out << r.index << ',' << format_fixed(r.position.east) << ','
            << format_fixed(r.position.north) << ',' << format_fixed(r.heading_deg) << ','
            << format_fixed(r.theta_rel_deg) << ',' << r.selection.to_string() << ','
            << format_fixed(r.tx_gain_dbi) << ',' << format_fixed(r.p_r_dbm) << ','
            << format_fixed(r.rssi_dbm) << '\n';
}

void write_compare_csv(const ComparisonResult &comparison, std::ostream &out)
{
    out << "index,delta_rss_db\n";
    for (std::size_t i = 0; i < comparison.indices.size(); ++i)
        out << comparison.indices[i] << ','
            << format_fixed(comparison.delta_rss_db(static_cast<Eigen::Index>(i))) << '\n';
    out << "mean," << format_fixed(comparison.mean_delta_db) << '\n';
}

} // namespace beamsim
