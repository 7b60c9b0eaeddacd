// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#pragma once

#include "beamsim/antenna.hpp"
#include "beamsim/geometry.hpp"
#include "beamsim/link_budget.hpp"

#include <Eigen/Dense>
#include <cstddef>
#include <string>
#include <vector>

namespace beamsim {

// A 2D obstacle footprint treated as an infinite-height prism. Heights
// affect only the Euclidean path length, never the crossing geometry.
struct Obstacle
{
    std::string name;
    double transmission_loss_db = 12.0;
    std::vector<Position> footprint;
};

class Environment {
  public:
    Environment() = default;

    // Validates every obstacle: at least 3 vertices, simple (non-
    // self-intersecting) footprint, non-negative transmission loss.
    explicit Environment(std::vector<Obstacle> obstacles);

    const std::vector<Obstacle> &obstacles() const { return obstacles_; }

  private:
    std::vector<Obstacle> obstacles_;
};

struct Crossing
{
    std::size_t obstacle_index;
    int count;
};

// Number of proper boundary crossings of segment a-b per obstacle, for
// obstacles crossed at least once. A segment touching a vertex or running
// along an edge counts as zero crossings. Throws std::invalid_argument on
// a horizontally degenerate segment.
std::vector<Crossing> los_crossings(const Environment &env, const Position &a,
                                    const Position &b);

struct DominantPathParams
{
    double diffraction_penalty_db = 10.0;
    int max_diffractions = 1;
};

enum class PathKind { Direct, Diffracted };

struct PathResult
{
    PathKind kind = PathKind::Direct;
    std::vector<Position> vertices;
    double free_space_loss_db = 0.0;
    double excess_loss_db = 0.0;
    double total_loss_db = 0.0;
};

// Minimum-loss path between a and b: either the direct segment with free-
// space loss plus accumulated wall transmission losses, or a crossing-free
// diffracted polyline over obstacle corners with free-space loss of the
// unfolded polyline length plus a fixed penalty per corner. Corner
// candidates are convex-hull vertices pushed 0.1 m outward along the
// vertex bisector. Ties resolve to the direct path, then to fewer corners.
PathResult dominant_path_loss(const Environment &env, const Position &a, const Position &b,
                              double f_hz, const DominantPathParams &params = {});

// Rectangular cell grid; origin is the southwest corner, cells are
// evaluated at their centers at rx_height.
struct GridRegion
{
    double origin_east_m = 0.0;
    double origin_north_m = 0.0;
    int cells_east = 0;
    int cells_north = 0;
    double cell_size_m = 1.0;
    double rx_height_m = 1.80;
};

class CoverageGrid {
  public:
    CoverageGrid(const GridRegion &region, Eigen::ArrayXXd values);

    const GridRegion &region() const { return region_; }
    int cells_east() const { return region_.cells_east; }
    int cells_north() const { return region_.cells_north; }

    // Row index 0 is the southmost row.
    double value(int ix_east, int iy_north) const { return values_(iy_north, ix_east); }
    Position cell_center(int ix_east, int iy_north) const;

    const Eigen::ArrayXXd &values() const { return values_; }

  private:
    GridRegion region_;
    Eigen::ArrayXXd values_;
};

// Received power per cell center for a fixed transmitter, selection, and
// heading. The budget template supplies all terms except tx gain and path
// losses, which are computed per cell. The cell containing the transmitter
// is set to NaN. Cells are independent; with threads > 1 rows are
// partitioned statically and results are bit-identical to sequential
// evaluation.
CoverageGrid coverage_grid(const Environment &env, const Position &tx,
                           const AntennaArray &array, const AntennaSelection &selection,
                           Angle heading, const LinkBudget &budget_template, double f_hz,
                           const GridRegion &region, const DominantPathParams &params = {},
                           int threads = 1);

} // namespace beamsim
