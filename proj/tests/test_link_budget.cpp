// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/link_budget.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

using namespace beamsim;

TEST_CASE("free_space_path_loss_db matches direct evaluation")
{
    CHECK(free_space_path_loss_db(100.0, 5.9e9) ==
          doctest::Approx(87.86482345472626).epsilon(1e-12));
    CHECK(free_space_path_loss_db(127.0, 5.9e9) ==
          doctest::Approx(89.94089787384542).epsilon(1e-12));
    CHECK(free_space_path_loss_db(1.0, 5.9e9) ==
          doctest::Approx(47.86482345472626).epsilon(1e-12));
}

TEST_CASE("free_space_path_loss_db rejects non-positive inputs")
{
    CHECK_THROWS_AS(free_space_path_loss_db(0.0, 5.9e9), std::invalid_argument);
    CHECK_THROWS_AS(free_space_path_loss_db(-1.0, 5.9e9), std::invalid_argument);
    CHECK_THROWS_AS(free_space_path_loss_db(100.0, 0.0), std::invalid_argument);
}

TEST_CASE("received_power_dbm sums the budget with correct signs")
{
    CHECK(received_power_dbm(LinkBudget{}) == 0.0);

    LinkBudget paper;
    paper.tx_power_dbm = 0.0;
    paper.tx_losses_db = 2.5;
    paper.tx_gain_dbi = 11.0;
    paper.path_loss_fs_db = free_space_path_loss_db(127.0, 5.9e9);
    paper.rx_gain_dbi = 16.0;
    CHECK(received_power_dbm(paper) == doctest::Approx(-65.44089787384542).epsilon(1e-12));

    LinkBudget isotropic;
    isotropic.path_loss_fs_db = free_space_path_loss_db(100.0, 5.9e9);
    CHECK(received_power_dbm(isotropic) ==
          doctest::Approx(-87.86482345472626).epsilon(1e-12));
}

TEST_CASE("received_power_dbm validates the budget")
{
    LinkBudget bad;
    bad.tx_gain_dbi = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(received_power_dbm(bad), std::invalid_argument);

    LinkBudget negative_loss;
    negative_loss.rx_losses_db = -1.0;
    CHECK_THROWS_AS(received_power_dbm(negative_loss), std::invalid_argument);
}

TEST_CASE("received_power_inverse_square_dbm evaluates the linear law")
{
    CHECK(received_power_inverse_square_dbm(0.0, 100.0, 5.9e9) ==
          doctest::Approx(-87.86482345472626).epsilon(1e-12));
    CHECK(received_power_inverse_square_dbm(0.0, 200.0, 5.9e9) ==
          doctest::Approx(-93.88542336800589).epsilon(1e-12));
    CHECK(received_power_inverse_square_dbm(10.0, 100.0, 5.9e9) ==
          doctest::Approx(-77.86482345472626).epsilon(1e-12));
    CHECK_THROWS_AS(received_power_inverse_square_dbm(0.0, 0.0, 5.9e9),
                    std::invalid_argument);
}

TEST_CASE("the two received-power routes agree on isotropic free-space links")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> dist(1.0, 1e4);
    std::uniform_real_distribution<double> freq(1e8, 1e10);
    std::uniform_real_distribution<double> power(-30.0, 30.0);
    for (int i = 0; i < 300; ++i) {
        const double d = dist(rng);
        const double f = freq(rng);
        const double p = power(rng);
        LinkBudget budget;
        budget.tx_power_dbm = p;
        budget.path_loss_fs_db = free_space_path_loss_db(d, f);
        CHECK(std::abs(received_power_dbm(budget) -
                       received_power_inverse_square_dbm(p, d, f)) < 1e-9);
    }
}

TEST_CASE("doubling the distance costs exactly 20 lg 2")
{
    const double expected = 20.0 * std::log10(2.0);
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> dist(0.5, 5e3);
    std::uniform_real_distribution<double> freq(1e8, 1e10);
    for (int i = 0; i < 300; ++i) {
        const double d = dist(rng);
        const double f = freq(rng);
        CHECK(std::abs(free_space_path_loss_db(2.0 * d, f) - free_space_path_loss_db(d, f) -
                       expected) < 1e-9);
    }
}

TEST_CASE("free_space_path_loss_db increases strictly in both arguments")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> dist(1.0, 1e4);
    std::uniform_real_distribution<double> freq(1e8, 1e10);
    std::uniform_real_distribution<double> factor(1.001, 3.0);
    for (int i = 0; i < 300; ++i) {
        const double d = dist(rng);
        const double f = freq(rng);
        const double k = factor(rng);
        CHECK(free_space_path_loss_db(d * k, f) > free_space_path_loss_db(d, f));
        CHECK(free_space_path_loss_db(d, f * k) > free_space_path_loss_db(d, f));
    }
}

TEST_CASE("distance_ratio_for_gain converts margins to range factors")
{
    CHECK(distance_ratio_for_gain(0.0) == 1.0);
    CHECK(distance_ratio_for_gain(6.0206) ==
          doctest::Approx(2.0000000199681045).epsilon(1e-12));
    CHECK(distance_ratio_for_gain(8.0) == doctest::Approx(2.51188643150958).epsilon(1e-12));

    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> delta(-20.0, 20.0);
    for (int i = 0; i < 200; ++i) {
        const double a = delta(rng);
        const double b = delta(rng);
        CHECK(distance_ratio_for_gain(a + b) ==
              doctest::Approx(distance_ratio_for_gain(a) * distance_ratio_for_gain(b))
                  .epsilon(1e-12));
    }
}

TEST_CASE("gain_from_directivity_db evaluates and validates")
{
    CHECK(gain_from_directivity_db(1.0, 1.0) == 0.0);
    CHECK(gain_from_directivity_db(10.0, 1.0) == doctest::Approx(10.0));
    CHECK(gain_from_directivity_db(12.589, 1.0) == doctest::Approx(11.0).epsilon(1e-4));
    CHECK(gain_from_directivity_db(10.0, 0.5) < gain_from_directivity_db(10.0, 1.0));
    CHECK_THROWS_AS(gain_from_directivity_db(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(gain_from_directivity_db(10.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(gain_from_directivity_db(10.0, 1.1), std::invalid_argument);
}

TEST_CASE("directivity_ratio composes with gain_from_directivity_db")
{
    CHECK(directivity_ratio(1.0, 1.0) == 1.0);
    CHECK(directivity_ratio(5.0, 2.5) == doctest::Approx(2.0));
    CHECK(gain_from_directivity_db(directivity_ratio(12.589, 1.0), 1.0) ==
          doctest::Approx(11.0).epsilon(1e-4));
    CHECK_THROWS_AS(directivity_ratio(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(directivity_ratio(1.0, -2.0), std::invalid_argument);
}
