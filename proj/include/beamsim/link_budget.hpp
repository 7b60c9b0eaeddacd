// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#pragma once

namespace beamsim {

// Propagation medium is fixed to vacuum/air.
inline constexpr double kSpeedOfLightMps = 299792458.0;

// All terms of the received-power budget. Powers in dBm, gains in dBi,
// losses in dB; losses enter with positive sign and are subtracted.
struct LinkBudget
{
    double tx_power_dbm = 0.0;
    double tx_losses_db = 0.0;
    double tx_gain_dbi = 0.0;
    double path_loss_fs_db = 0.0;
    double path_loss_div_db = 0.0;
    double rx_gain_dbi = 0.0;
    double rx_losses_db = 0.0;
};

// Received power in dBm as the signed sum of all budget terms. Throws
// std::invalid_argument when a field is non-finite or a loss is negative.
double received_power_dbm(const LinkBudget &budget);

// Free-space path loss in dB: 20 lg d + 20 lg f - 20 lg(c / 4 pi).
// Throws std::invalid_argument unless d > 0 and f > 0.
double free_space_path_loss_db(double d_m, double f_hz);

// Received power in dBm from the inverse-square law, evaluated in linear
// milliwatts and converted back to dB. For isotropic lossless links this
// agrees with received_power_dbm over the free-space path loss.
double received_power_inverse_square_dbm(double tx_power_dbm, double d_m, double f_hz);

// Antenna gain in dB from directivity and radiation efficiency:
// 10 lg(D * eta). Requires D > 0 and 0 < eta <= 1.
double gain_from_directivity_db(double directivity, double efficiency);

// Directivity as the ratio of radiation intensity to the isotropic
// intensity. Requires both intensities positive.
double directivity_ratio(double intensity_w_sr, double isotropic_intensity_w_sr);

// Factor by which free-space range scales for a given link-margin change
// in dB: 10^(delta / 20).
double distance_ratio_for_gain(double delta_db);

} // namespace beamsim
