// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/link_budget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beamsim {

double received_power_dbm(const LinkBudget &budget)
{
    const double fields[] = {budget.tx_power_dbm,     budget.tx_losses_db,
                             budget.tx_gain_dbi,      budget.path_loss_fs_db,
                             budget.path_loss_div_db, budget.rx_gain_dbi,
                             budget.rx_losses_db};
    for (double v : fields)
        if (!std::isfinite(v))
            throw std::invalid_argument("received_power_dbm: budget fields must be finite");
    if (budget.tx_losses_db < 0.0 || budget.rx_losses_db < 0.0 ||
        budget.path_loss_div_db < 0.0)
        throw std::invalid_argument("received_power_dbm: losses must be non-negative");

    return budget.tx_power_dbm - budget.tx_losses_db + budget.tx_gain_dbi -
           budget.path_loss_fs_db - budget.path_loss_div_db + budget.rx_gain_dbi -
           budget.rx_losses_db;
}

double free_space_path_loss_db(double d_m, double f_hz)
{
    if (!(d_m > 0.0))
        throw std::invalid_argument("free_space_path_loss_db: distance must be positive");
    if (!(f_hz > 0.0))
        throw std::invalid_argument("free_space_path_loss_db: frequency must be positive");

    return 20.0 * std::log10(d_m) + 20.0 * std::log10(f_hz) -
           20.0 * std::log10(kSpeedOfLightMps / (4.0 * std::numbers::pi));
}

double received_power_inverse_square_dbm(double tx_power_dbm, double d_m, double f_hz)
{
    if (!(d_m > 0.0))
        throw std::invalid_argument("received_power_inverse_square_dbm: distance must be positive");
    if (!(f_hz > 0.0))
        throw std::invalid_argument("received_power_inverse_square_dbm: frequency must be positive");

    const double tx_mw = std::pow(10.0, tx_power_dbm / 10.0);
    const double aperture_ratio = kSpeedOfLightMps / (4.0 * std::numbers::pi * d_m * f_hz);
    const double rx_mw = tx_mw * aperture_ratio * aperture_ratio;
    return 10.0 * std::log10(rx_mw);
}

double gain_from_directivity_db(double directivity, double efficiency)
{
    if (!(directivity > 0.0))
        throw std::invalid_argument("gain_from_directivity_db: directivity must be positive");
    if (!(efficiency > 0.0) || efficiency > 1.0)
        throw std::invalid_argument("gain_from_directivity_db: efficiency must be in (0, 1]");

    return 10.0 * std::log10(directivity * efficiency);
}

double directivity_ratio(double intensity_w_sr, double isotropic_intensity_w_sr)
{
    if (!(intensity_w_sr > 0.0) || !(isotropic_intensity_w_sr > 0.0))
        throw std::invalid_argument("directivity_ratio: intensities must be positive");

    return intensity_w_sr / isotropic_intensity_w_sr;
}

double distance_ratio_for_gain(double delta_db)
{
    if (!std::isfinite(delta_db))
        throw std::invalid_argument("distance_ratio_for_gain: delta must be finite");

    return std::pow(10.0, delta_db / 20.0);
}

} // namespace beamsim
