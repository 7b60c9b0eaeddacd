// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links
//
// End-to-end acceptance checks. Every numeric expectation is either an
// analytic identity or recomputed here through an independent code path;
// nothing is read back from the library under test. Usage:
//
//   beamsim_acceptance <path-to-beamsim-cli> <configs-dir>
//
// One line per criterion, exit code equals the number of failures.

#include "beamsim/antenna.hpp"
#include "beamsim/config.hpp"
#include "beamsim/geometry.hpp"
#include "beamsim/link_budget.hpp"
#include "beamsim/propagation.hpp"
#include "beamsim/scenario.hpp"
#include "beamsim/switching.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kC = 299792458.0;

double oracle_normalize(double deg)
{
    double r = std::fmod(deg, 360.0);
    if (r <= -180.0) {
        r += 360.0;
    } else if (r > 180.0) {
        r -= 360.0;
    }
    return r;
}

double oracle_bearing(double de, double dn)
{
    return std::atan2(de, dn) * 180.0 / kPi;
}

double oracle_fspl(double d_m, double f_hz)
{
    return 20.0 * std::log10(4.0 * kPi * d_m * f_hz / kC);
}

double oracle_element_gain(double theta_rel_deg, int id)
{
    const double boresight = (id - 4.5) * 15.0;
    const double off = std::abs(oracle_normalize(theta_rel_deg - boresight));
    const double rolloff = 12.0 * (off / 45.0) * (off / 45.0);
    return 11.0 - std::min(rolloff, 32.0);
}

// 0 means the omni antenna.
int oracle_select(double theta_rel_deg)
{
    if (std::abs(theta_rel_deg) > 100.0) {
        return 0;
    }
    int best = 1;
    double best_off = std::abs(oracle_normalize(theta_rel_deg - (1 - 4.5) * 15.0));
    for (int id = 2; id <= 8; ++id) {
        const double off = std::abs(oracle_normalize(theta_rel_deg - (id - 4.5) * 15.0));
        if (off < best_off) {
            best = id;
            best_off = off;
        }
    }
    return best;
}

struct P2
{
    double x;
    double y;
};

double cross2(const P2& o, const P2& a, const P2& b)
{
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool strictly_crosses(const P2& a, const P2& b, const P2& c, const P2& d)
{
    const double d1 = cross2(a, b, c);
    const double d2 = cross2(a, b, d);
    const double d3 = cross2(c, d, a);
    const double d4 = cross2(c, d, b);
    const bool ab_splits = (d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0);
    const bool cd_splits = (d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0);
    return ab_splits && cd_splits;
}

struct OraclePolygon
{
    std::vector<P2> vertices;
    double loss_db = 0.0;
};

int oracle_crossing_count(const OraclePolygon& poly, const P2& a, const P2& b)
{
    int count = 0;
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const P2& c = poly.vertices[i];
        const P2& d = poly.vertices[(i + 1) % n];
        if (strictly_crosses(a, b, c, d)) {
            ++count;
        }
    }
    return count;
}

bool oracle_leg_clear(const std::vector<OraclePolygon>& polys, const P2& a, const P2& b)
{
    for (const auto& poly : polys) {
        if (oracle_crossing_count(poly, a, b) > 0) {
            return false;
        }
    }
    return true;
}

std::vector<P2> oracle_corners(const OraclePolygon& poly)
{
    std::vector<P2> corners;
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const P2& u = poly.vertices[(i + n - 1) % n];
        const P2& v = poly.vertices[i];
        const P2& w = poly.vertices[(i + 1) % n];
        const double lu = std::hypot(u.x - v.x, u.y - v.y);
        const double lw = std::hypot(w.x - v.x, w.y - v.y);
        const double bx = (u.x - v.x) / lu + (w.x - v.x) / lw;
        const double by = (u.y - v.y) / lu + (w.y - v.y) / lw;
        const double lb = std::hypot(bx, by);
        corners.push_back(P2{v.x - 0.1 * bx / lb, v.y - 0.1 * by / lb});
    }
    return corners;
}

double oracle_dominant_loss(const std::vector<OraclePolygon>& polys, const P2& a, const P2& b,
                            double f_hz, double penalty_db)
{
    const double direct_d = std::hypot(b.x - a.x, b.y - a.y);
    double wall_loss = 0.0;
    for (const auto& poly : polys) {
        wall_loss += poly.loss_db * oracle_crossing_count(poly, a, b);
    }
    double best = oracle_fspl(direct_d, f_hz) + wall_loss;

    std::vector<P2> corners;
    for (const auto& poly : polys) {
        const auto c = oracle_corners(poly);
        corners.insert(corners.end(), c.begin(), c.end());
    }

    const std::size_t n = corners.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!oracle_leg_clear(polys, a, corners[i]) || !oracle_leg_clear(polys, corners[i], b)) {
            continue;
        }
        const double len = std::hypot(corners[i].x - a.x, corners[i].y - a.y) +
                           std::hypot(b.x - corners[i].x, b.y - corners[i].y);
        const double loss = oracle_fspl(len, f_hz) + penalty_db;
        if (loss < best) {
            best = loss;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !oracle_leg_clear(polys, a, corners[i]) ||
                !oracle_leg_clear(polys, corners[i], corners[j]) ||
                !oracle_leg_clear(polys, corners[j], b)) {
                continue;
            }
            const double len = std::hypot(corners[i].x - a.x, corners[i].y - a.y) +
                               std::hypot(corners[j].x - corners[i].x,
                                          corners[j].y - corners[i].y) +
                               std::hypot(b.x - corners[j].x, b.y - corners[j].y);
            const double loss = oracle_fspl(len, f_hz) + 2.0 * penalty_db;
            if (loss < best) {
                best = loss;
            }
        }
    }
    return best;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv)
{
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <beamsim-cli> <configs-dir>\n", argv[0]);
        return 99;
    }
    const std::string cli_path = argv[1];
    const std::string configs_dir = argv[2];

    int failures = 0;
    int criterion = 0;
    const auto check = [&](const char* name, const std::function<bool()>& body) {
        ++criterion;
        bool ok = false;
        try {
            ok = body();
        } catch (const std::exception& e) {
            std::printf("       %d: exception: %s\n", criterion, e.what());
            ok = false;
        }
        std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", criterion, name);
        if (!ok) {
            ++failures;
        }
    };

    check("doubling the distance adds 20 lg 2 dB of free-space loss", [] {
        std::mt19937_64 rng(101);
        std::uniform_real_distribution<double> dist(0.5, 5e3);
        std::uniform_real_distribution<double> freq(1e8, 1e10);
        const double expected = 20.0 * std::log10(2.0);
        for (int i = 0; i < 1000; ++i) {
            const double d = dist(rng);
            const double f = freq(rng);
            const double got = beamsim::free_space_path_loss_db(2.0 * d, f) -
                               beamsim::free_space_path_loss_db(d, f);
            if (std::abs(got - expected) > 1e-9) {
                return false;
            }
        }
        return true;
    });

    check("gain margins convert to the expected range ratios", [] {
        if (std::abs(beamsim::distance_ratio_for_gain(8.0) - 2.5119) > 1e-4) {
            return false;
        }
        return std::abs(beamsim::distance_ratio_for_gain(6.0206) - 2.0) <= 1e-6;
    });

    check("the budget equation reproduces the inverse-square law", [] {
        std::mt19937_64 rng(103);
        std::uniform_real_distribution<double> dist(1.0, 1e4);
        std::uniform_real_distribution<double> freq(1e8, 1e10);
        std::uniform_real_distribution<double> power(-30.0, 30.0);
        for (int i = 0; i < 1000; ++i) {
            const double d = dist(rng);
            const double f = freq(rng);
            const double p = power(rng);
            beamsim::LinkBudget budget;
            budget.tx_power_dbm = p;
            budget.path_loss_fs_db = beamsim::free_space_path_loss_db(d, f);
            const double via_budget = beamsim::received_power_dbm(budget);
            const double via_law = beamsim::received_power_inverse_square_dbm(p, d, f);
            if (std::abs(via_budget - via_law) > 1e-9) {
                return false;
            }
        }
        return true;
    });

    check("a +/-60 deg rotation sweep never drops below 10 dBi", [] {
        const auto array = beamsim::AntennaArray::standard();
        const auto table = beamsim::rotation_sweep(array, 60.0, 5.0);
        if (table.angles_deg.size() != 25) {
            return false;
        }
        for (int i = 0; i < table.best_gain_dbi.size(); ++i) {
            if (!(table.best_gain_dbi(i) >= 10.0)) {
                return false;
            }
        }
        const auto fine = beamsim::rotation_sweep(array, 60.0, 2.5);
        return std::abs(fine.best_gain_dbi(21) - 11.0) <= 1e-12;
    });

    check("sector vs omni received power differs by the gain margin", [] {
        beamsim::ScenarioConfig config;
        const auto distances = beamsim::LoadedConfig::default_distances();
        const auto rows = beamsim::distance_run(config, distances);
        if (rows.size() != distances.size() * 9) {
            return false;
        }
        for (std::size_t block = 0; block < distances.size(); ++block) {
            const double ant4 = rows[9 * block + 3].p_r_dbm;
            const double omni = rows[9 * block + 8].p_r_dbm;
            if (std::abs((ant4 - omni) - 37.0 / 6.0) > 1e-9) {
                return false;
            }
        }
        beamsim::ScenarioConfig lossless = config;
        lossless.switch_model.insertion_loss_db = 0.0;
        const auto free_rows = beamsim::distance_run(lossless, {100.0});
        return std::abs((free_rows[3].p_r_dbm - free_rows[8].p_r_dbm) - 26.0 / 3.0) <= 1e-9;
    });

    check("switching always lands on the element with maximum gain", [] {
        const auto array = beamsim::AntennaArray::standard();
        const beamsim::SwitchPolicy policy;
        for (int k = 0; k <= 1200; ++k) {
            const double theta = (k - 600) / 10.0;
            const auto selection = beamsim::select_antenna(policy, array, beamsim::Angle(theta));
            if (!selection.is_element()) {
                return false;
            }
            if (selection.id() != beamsim::best_element_by_gain(array, beamsim::Angle(theta))) {
                return false;
            }
        }
        return true;
    });

    check("the omni fallback engages exactly beyond +/-100 deg", [] {
        const auto array = beamsim::AntennaArray::standard();
        const beamsim::SwitchPolicy policy;
        const auto at = [&](double theta) {
            return beamsim::select_antenna(policy, array, beamsim::Angle(theta));
        };
        return at(100.0) == beamsim::AntennaSelection::element(8) &&
               at(-100.0) == beamsim::AntennaSelection::element(1) && at(100.1).is_omni() &&
               at(-100.1).is_omni() && at(180.0).is_omni();
    });

    check("the L approach gains 6.411906 dB mean RSSI over omni", [&] {
        const auto loaded =
            beamsim::parse_scenario_config(read_file(configs_dir + "/l_approach.json"));

        auto switched_cfg = loaded.scenario;
        switched_cfg.mode = beamsim::RunMode::Switched;
        auto omni_cfg = loaded.scenario;
        omni_cfg.mode = beamsim::RunMode::OmniOnly;

        const auto switched = beamsim::run_scenario(switched_cfg);
        const auto omni = beamsim::run_scenario(omni_cfg);
        const auto comparison = beamsim::compare_runs(switched, omni);
        if (std::abs(comparison.mean_delta_db - 6.411906113013497) > 1e-6) {
            return false;
        }
        if (!(comparison.mean_delta_db >= 6.0)) {
            return false;
        }

        const auto& traj = loaded.scenario.trajectory;
        const auto& rsu = loaded.scenario.rsu_position;
        if (traj.size() != switched.size()) {
            return false;
        }
        double heading = 0.0;
        for (std::size_t i = 0; i < traj.size(); ++i) {
            const double de_next =
                i + 1 < traj.size() ? traj[i + 1].position.east - traj[i].position.east : 0.0;
            const double dn_next =
                i + 1 < traj.size() ? traj[i + 1].position.north - traj[i].position.north : 0.0;
            if (i + 1 < traj.size() && (de_next != 0.0 || dn_next != 0.0)) {
                heading = oracle_bearing(de_next, dn_next);
            }
            const double de = rsu.east - traj[i].position.east;
            const double dn = rsu.north - traj[i].position.north;
            const double dh = rsu.height - traj[i].position.height;
            const double d3 = std::hypot(std::hypot(de, dn), dh);
            const double theta = oracle_normalize(oracle_bearing(de, dn) - heading);
            const double fspl = oracle_fspl(d3, loaded.scenario.frequency_hz);

            const int id = oracle_select(theta);
            const double sw_gain = id == 0 ? 2.0 : oracle_element_gain(theta, id);
            const double sw_losses = id == 0 ? 0.0 : 2.5;
            const double sw_pr = 0.0 - sw_losses + sw_gain - fspl + 16.0;
            const double om_pr = 0.0 + 2.0 - fspl + 16.0;

            if (std::abs(switched[i].p_r_dbm - sw_pr) > 1e-9) {
                return false;
            }
            if (std::abs(omni[i].p_r_dbm - om_pr) > 1e-9) {
                return false;
            }
        }
        return true;
    });

    check("dominant-path losses match an exhaustive reference search", [] {
        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<int> n_obs_dist(1, 2);
        std::uniform_int_distribution<int> k_dist(3, 6);
        std::uniform_real_distribution<double> radius(2.0, 6.0);
        std::uniform_real_distribution<double> center_e(-12.0, 12.0);
        std::uniform_real_distribution<double> center_n(-8.0, 8.0);
        std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
        std::uniform_real_distribution<double> loss(5.0, 40.0);

        const beamsim::Position a{-20.0, 0.0, 1.8};
        const beamsim::Position b{20.0, 0.0, 1.8};
        beamsim::DominantPathParams params;
        params.max_diffractions = 2;

        for (int trial = 0; trial < 100; ++trial) {
            const int n_obs = n_obs_dist(rng);
            std::vector<beamsim::Obstacle> obstacles;
            std::vector<OraclePolygon> polys;
            for (int o = 0; o < n_obs; ++o) {
                const int k = k_dist(rng);
                const double r = radius(rng);
                const double ce = center_e(rng);
                const double cn = center_n(rng);
                const double phi = phase(rng);
                const double l = loss(rng);

                beamsim::Obstacle obstacle;
                obstacle.name = "poly";
                obstacle.transmission_loss_db = l;
                OraclePolygon poly;
                poly.loss_db = l;
                for (int i = 0; i < k; ++i) {
                    const double ang = phi + 2.0 * kPi * i / k;
                    const double e = ce + r * std::cos(ang);
                    const double n = cn + r * std::sin(ang);
                    obstacle.footprint.push_back(beamsim::Position{e, n, 0.0});
                    poly.vertices.push_back(P2{e, n});
                }
                obstacles.push_back(obstacle);
                polys.push_back(poly);
            }

            const beamsim::Environment env(obstacles);
            const auto result = beamsim::dominant_path_loss(env, a, b, 5.9e9, params);
            const double expected =
                oracle_dominant_loss(polys, P2{a.east, a.north}, P2{b.east, b.north}, 5.9e9,
                                     params.diffraction_penalty_db);
            if (std::abs(result.total_loss_db - expected) > 1e-9) {
                return false;
            }
        }
        return true;
    });

    check("coverage maps are symmetric, thread-stable, and reproducible", [&] {
        std::vector<beamsim::Obstacle> obstacles(3);
        obstacles[0].name = "east block";
        obstacles[0].transmission_loss_db = 12.0;
        obstacles[0].footprint = {beamsim::Position{3.0, 6.0, 0.0},
                                  beamsim::Position{6.0, 6.0, 0.0},
                                  beamsim::Position{6.0, 9.0, 0.0},
                                  beamsim::Position{3.0, 9.0, 0.0}};
        obstacles[1].name = "west block";
        obstacles[1].transmission_loss_db = 12.0;
        obstacles[1].footprint = {beamsim::Position{-3.0, 6.0, 0.0},
                                  beamsim::Position{-6.0, 6.0, 0.0},
                                  beamsim::Position{-6.0, 9.0, 0.0},
                                  beamsim::Position{-3.0, 9.0, 0.0}};
        obstacles[2].name = "center block";
        obstacles[2].transmission_loss_db = 9.0;
        obstacles[2].footprint = {beamsim::Position{-1.5, 12.0, 0.0},
                                  beamsim::Position{1.5, 12.0, 0.0},
                                  beamsim::Position{1.5, 14.0, 0.0},
                                  beamsim::Position{-1.5, 14.0, 0.0}};
        const beamsim::Environment env(obstacles);

        const beamsim::Position tx{0.0, -5.0, 1.8};
        const auto array = beamsim::AntennaArray::standard();
        beamsim::LinkBudget budget;
        budget.tx_losses_db = 2.5;
        budget.rx_gain_dbi = 16.0;

        beamsim::GridRegion region;
        region.origin_east_m = -10.0;
        region.origin_north_m = 0.0;
        region.cells_east = 20;
        region.cells_north = 20;

        const auto grid = beamsim::coverage_grid(env, tx, array,
                                                 beamsim::AntennaSelection::element(4),
                                                 beamsim::Angle(7.5), budget, 5.9e9, region);
        for (int iy = 0; iy < region.cells_north; ++iy) {
            for (int ix = 0; ix < region.cells_east; ++ix) {
                const double v = grid.value(ix, iy);
                const double mirrored = grid.value(region.cells_east - 1 - ix, iy);
                if (!std::isfinite(v) || std::abs(v - mirrored) > 1e-9) {
                    return false;
                }
            }
        }

        const auto threaded = beamsim::coverage_grid(env, tx, array,
                                                     beamsim::AntennaSelection::element(4),
                                                     beamsim::Angle(7.5), budget, 5.9e9, region,
                                                     beamsim::DominantPathParams{}, 4);
        for (int iy = 0; iy < region.cells_north; ++iy) {
            for (int ix = 0; ix < region.cells_east; ++ix) {
                if (threaded.value(ix, iy) != grid.value(ix, iy)) {
                    return false;
                }
            }
        }

        const auto tmp = std::filesystem::temp_directory_path();
        const std::string out1 = (tmp / "beamsim_accept_run1.csv").string();
        const std::string out2 = (tmp / "beamsim_accept_run2.csv").string();
        const std::string config = configs_dir + "/l_approach.json";
        const auto run_once = [&](const std::string& out) {
            const std::string cmd = "\"" + cli_path + "\" run --config \"" + config +
                                    "\" --out \"" + out + "\"";
            return std::system(cmd.c_str()) == 0;
        };
        if (!run_once(out1) || !run_once(out2)) {
            return false;
        }
        const std::string first = read_file(out1);
        const std::string second = read_file(out2);
        return !first.empty() && first == second &&
               std::count(first.begin(), first.end(), '\n') == 51;
    });

    if (failures == 0) {
        std::printf("all %d criteria passed\n", criterion);
    } else {
        std::printf("%d of %d criteria failed\n", failures, criterion);
    }
    return failures;
}
