// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace beamsim {

namespace {

struct Vec2
{
    double x = 0.0;
    double y = 0.0;
};

Vec2 flat(const Position &p)
{
    return {p.east, p.north};
}

double cross(const Vec2 &o, const Vec2 &a, const Vec2 &b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dot(const Vec2 &o, const Vec2 &a, const Vec2 &b)
{
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y);
}

bool same_point(const Vec2 &a, const Vec2 &b)
{
    return a.x == b.x && a.y == b.y;
}

// Strict sign test on both orientation pairs: boundary touches (any
// collinear endpoint) do not count as a crossing.
bool proper_crossing(const Vec2 &p1, const Vec2 &p2, const Vec2 &q1, const Vec2 &q2)
{
    const double d1 = cross(q1, q2, p1);
    const double d2 = cross(q1, q2, p2);
    const double d3 = cross(p1, p2, q1);
    const double d4 = cross(p1, p2, q2);
    return ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) &&
           ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0));
}

bool on_segment(const Vec2 &p, const Vec2 &q, const Vec2 &r)
{
    return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
           std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
}

// Closed-segment intersection test, touches included.
bool segments_touch(const Vec2 &p1, const Vec2 &p2, const Vec2 &q1, const Vec2 &q2)
{
    if (proper_crossing(p1, p2, q1, q2))
        return true;
    if (cross(p1, p2, q1) == 0.0 && on_segment(p1, p2, q1))
        return true;
    if (cross(p1, p2, q2) == 0.0 && on_segment(p1, p2, q2))
        return true;
    if (cross(q1, q2, p1) == 0.0 && on_segment(q1, q2, p1))
        return true;
    if (cross(q1, q2, p2) == 0.0 && on_segment(q1, q2, p2))
        return true;
    return false;
}

void validate_footprint(const Obstacle &obstacle)
{
    const std::vector<Position> &fp = obstacle.footprint;
    const std::size_t n = fp.size();
    if (n < 3)
        throw std::invalid_argument("Environment: obstacle \"" + obstacle.name +
                                    "\" needs at least 3 footprint vertices");

    std::vector<Vec2> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(fp[i].east) || !std::isfinite(fp[i].north))
            throw std::invalid_argument("Environment: obstacle \"" + obstacle.name +
                                        "\" has a non-finite vertex");
        v[i] = flat(fp[i]);
    }

    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 &prev = v[(i + n - 1) % n];
        const Vec2 &here = v[i];
        const Vec2 &next = v[(i + 1) % n];
        if (same_point(here, next))
            throw std::invalid_argument("Environment: obstacle \"" + obstacle.name +
                                        "\" has coincident consecutive vertices");
        if (cross(here, prev, next) == 0.0 && dot(here, prev, next) > 0.0)
            throw std::invalid_argument("Environment: obstacle \"" + obstacle.name +
                                        "\" footprint folds back on itself");
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent)
                continue;
            if (segments_touch(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]))
                throw std::invalid_argument("Environment: obstacle \"" + obstacle.name +
                                            "\" footprint is not a simple polygon");
        }
    }
}

int proper_crossing_count(const std::vector<Position> &footprint, const Vec2 &a, const Vec2 &b)
{
    const std::size_t n = footprint.size();
    int count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 p = flat(footprint[i]);
        const Vec2 q = flat(footprint[(i + 1) % n]);
        if (proper_crossing(a, b, p, q))
            ++count;
    }
    return count;
}

// Andrew monotone chain; counter-clockwise order, collinear points dropped.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts)
{
    std::sort(pts.begin(), pts.end(), [](const Vec2 &a, const Vec2 &b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(), same_point), pts.end());

    const std::size_t n = pts.size();
    if (n < 3)
        return pts;

    std::vector<Vec2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

constexpr double kCornerOffsetM = 0.1;

// Hull vertices pushed outward along the vertex bisector so that a
// polyline over a corner clears the generating obstacle.
std::vector<Vec2> corner_candidates(const Environment &env)
{
    std::vector<Vec2> candidates;
    for (const Obstacle &obstacle : env.obstacles()) {
        std::vector<Vec2> pts;
        pts.reserve(obstacle.footprint.size());
        for (const Position &p : obstacle.footprint)
            pts.push_back(flat(p));

        const std::vector<Vec2> hull = convex_hull(std::move(pts));
        const std::size_t n = hull.size();
        if (n < 3)
            continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 &u = hull[(i + n - 1) % n];
            const Vec2 &v = hull[i];
            const Vec2 &w = hull[(i + 1) % n];
            const double lu = std::hypot(u.x - v.x, u.y - v.y);
            const double lw = std::hypot(w.x - v.x, w.y - v.y);
            double bx = (u.x - v.x) / lu + (w.x - v.x) / lw;
            double by = (u.y - v.y) / lu + (w.y - v.y) / lw;
            const double lb = std::hypot(bx, by);
            if (lb < 1e-12)
                continue;
            candidates.push_back({v.x - kCornerOffsetM * bx / lb,
                                  v.y - kCornerOffsetM * by / lb});
        }
    }
    return candidates;
}

bool crossing_free(const Environment &env, const Vec2 &a, const Vec2 &b)
{
    for (const Obstacle &obstacle : env.obstacles()) {
        const std::size_t n = obstacle.footprint.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Vec2 p = flat(obstacle.footprint[i]);
            const Vec2 q = flat(obstacle.footprint[(i + 1) % n]);
            if (proper_crossing(a, b, p, q))
                return false;
        }
    }
    return true;
}

} // namespace

Environment::Environment(std::vector<Obstacle> obstacles) : obstacles_(std::move(obstacles))
{
    for (const Obstacle &obstacle : obstacles_) {
        if (!(obstacle.transmission_loss_db >= 0.0))
            throw std::invalid_argument("Environment: obstacle \"" + obstacle.name +
                                        "\" transmission loss must be non-negative");
        validate_footprint(obstacle);
    }
}

std::vector<Crossing> los_crossings(const Environment &env, const Position &a,
                                    const Position &b)
{
    if (a.east == b.east && a.north == b.north)
        throw std::invalid_argument("los_crossings: segment is horizontally degenerate");

    const Vec2 pa = flat(a);
    const Vec2 pb = flat(b);
    std::vector<Crossing> result;
    for (std::size_t i = 0; i < env.obstacles().size(); ++i) {
        const int count = proper_crossing_count(env.obstacles()[i].footprint, pa, pb);
        if (count > 0)
            result.push_back({i, count});
    }
    return result;
}

PathResult dominant_path_loss(const Environment &env, const Position &a, const Position &b,
                              double f_hz, const DominantPathParams &params)
{
    if (a.east == b.east && a.north == b.north)
        throw std::invalid_argument("dominant_path_loss: endpoints are horizontally coincident");
    if (!(f_hz > 0.0))
        throw std::invalid_argument("dominant_path_loss: frequency must be positive");
    if (!(params.diffraction_penalty_db >= 0.0))
        throw std::invalid_argument("dominant_path_loss: diffraction penalty must be non-negative");
    if (params.max_diffractions < 0)
        throw std::invalid_argument("dominant_path_loss: max_diffractions must be non-negative");

    PathResult best;
    best.kind = PathKind::Direct;
    best.vertices = {a, b};
    best.free_space_loss_db = free_space_path_loss_db(distance(a, b), f_hz);
    best.excess_loss_db = 0.0;
    for (const Crossing &c : los_crossings(env, a, b))
        best.excess_loss_db += c.count * env.obstacles()[c.obstacle_index].transmission_loss_db;
    best.total_loss_db = best.free_space_loss_db + best.excess_loss_db;

    const Vec2 pa = flat(a);
    const Vec2 pb = flat(b);
    const std::vector<Vec2> corners = corner_candidates(env);
    const double dh = b.height - a.height;

    std::vector<std::size_t> chain;
    std::vector<char> used(corners.size(), 0);

    // Polylines with fewer corners are enumerated first so that exact
    // loss ties keep the shorter chain.
    auto evaluate_chain = [&]() {
        double h_len = 0.0;
        Vec2 prev = pa;
        for (std::size_t idx : chain) {
            h_len += std::hypot(corners[idx].x - prev.x, corners[idx].y - prev.y);
            prev = corners[idx];
        }
        h_len += std::hypot(pb.x - prev.x, pb.y - prev.y);

        const double path_len = std::hypot(h_len, dh);
        const double fs = free_space_path_loss_db(path_len, f_hz);
        const double excess = params.diffraction_penalty_db * static_cast<double>(chain.size());
        const double total = fs + excess;
        if (total >= best.total_loss_db)
            return;

        best.kind = PathKind::Diffracted;
        best.free_space_loss_db = fs;
        best.excess_loss_db = excess;
        best.total_loss_db = total;
        best.vertices.clear();
        best.vertices.push_back(a);
        double along = 0.0;
        Vec2 at = pa;
        for (std::size_t idx : chain) {
            along += std::hypot(corners[idx].x - at.x, corners[idx].y - at.y);
            at = corners[idx];
            const double h = (h_len > 0.0) ? a.height + dh * along / h_len : a.height;
            best.vertices.push_back({corners[idx].x, corners[idx].y, h});
        }
        best.vertices.push_back(b);
    };

    auto extend = [&](auto &&self, std::size_t remaining) -> void {
        const Vec2 from = chain.empty() ? pa : corners[chain.back()];
        for (std::size_t idx = 0; idx < corners.size(); ++idx) {
            if (used[idx])
                continue;
            const Vec2 &c = corners[idx];
            if (same_point(from, c))
                continue;
            if (!crossing_free(env, from, c))
                continue;
            chain.push_back(idx);
            used[idx] = 1;
            if (remaining == 1) {
                if (!same_point(c, pb) && crossing_free(env, c, pb))
                    evaluate_chain();
            } else {
                self(self, remaining - 1);
            }
            used[idx] = 0;
            chain.pop_back();
        }
    };

    for (int length = 1; length <= params.max_diffractions; ++length)
        extend(extend, static_cast<std::size_t>(length));

    return best;
}

CoverageGrid::CoverageGrid(const GridRegion &region, Eigen::ArrayXXd values)
    : region_(region), values_(std::move(values))
{
    if (values_.rows() != region_.cells_north || values_.cols() != region_.cells_east)
        throw std::invalid_argument("CoverageGrid: value array does not match the region");
}

Position CoverageGrid::cell_center(int ix_east, int iy_north) const
{
    return {region_.origin_east_m + (ix_east + 0.5) * region_.cell_size_m,
            region_.origin_north_m + (iy_north + 0.5) * region_.cell_size_m,
            region_.rx_height_m};
}

CoverageGrid coverage_grid(const Environment &env, const Position &tx,
                           const AntennaArray &array, const AntennaSelection &selection,
                           Angle heading, const LinkBudget &budget_template, double f_hz,
                           const GridRegion &region, const DominantPathParams &params,
                           int threads)
{
    if (region.cells_east <= 0 || region.cells_north <= 0)
        throw std::invalid_argument("coverage_grid: region must contain at least one cell");
    if (!(region.cell_size_m > 0.0))
        throw std::invalid_argument("coverage_grid: cell size must be positive");

    Eigen::ArrayXXd values(region.cells_north, region.cells_east);

    // Cell holding the transmitter stays at the not-computed sentinel.
    const int tx_ix = static_cast<int>(std::floor((tx.east - region.origin_east_m) /
                                                  region.cell_size_m));
    const int tx_iy = static_cast<int>(std::floor((tx.north - region.origin_north_m) /
                                                  region.cell_size_m));

    auto eval_row = [&](int iy) {
        for (int ix = 0; ix < region.cells_east; ++ix) {
            if (ix == tx_ix && iy == tx_iy) {
                values(iy, ix) = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            const Position center = {region.origin_east_m + (ix + 0.5) * region.cell_size_m,
                                     region.origin_north_m + (iy + 0.5) * region.cell_size_m,
                                     region.rx_height_m};
            const Angle theta_rel = relative_bearing(tx, heading, center);
            const PathResult path = dominant_path_loss(env, tx, center, f_hz, params);
            LinkBudget budget = budget_template;
            budget.tx_gain_dbi = array_gain(array, selection, theta_rel);
            budget.path_loss_fs_db = path.free_space_loss_db;
            budget.path_loss_div_db = path.excess_loss_db;
            values(iy, ix) = received_power_dbm(budget);
        }
    };

    const int n_threads = std::min(std::max(threads, 1), region.cells_north);
    if (n_threads == 1) {
        for (int iy = 0; iy < region.cells_north; ++iy)
            eval_row(iy);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_threads));
        for (int tid = 0; tid < n_threads; ++tid) {
            pool.emplace_back([&, tid]() {
                try {
                    for (int iy = tid; iy < region.cells_north; iy += n_threads)
                        eval_row(iy);
                } catch (...) {
                    errors[static_cast<std::size_t>(tid)] = std::current_exception();
                }
            });
        }
        for (std::thread &t : pool)
            t.join();
        for (const std::exception_ptr &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    return CoverageGrid(region, std::move(values));
}

} // namespace beamsim
