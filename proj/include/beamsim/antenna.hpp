// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#pragma once

#include "beamsim/geometry.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace beamsim {

// Azimuth gain model of one sector element: parabolic main lobe in dB,
// clamped to a flat sidelobe floor. Elevation dependence is not modeled.
struct SectorPattern
{
    double peak_gain_dbi = 11.0;
    Angle boresight;
    double half_power_beamwidth_deg = 45.0;
    double floor_gain_dbi = -21.0;
};

struct OmniPattern
{
    double gain_dbi = 2.0;
};

// Boresight of element id (1..8): (id - 4.5) * 15 deg, element 1 leftmost
// at -52.5 deg, element 8 rightmost at +52.5 deg.
Angle element_boresight(int id);

// One of the eight sector elements, or the omnidirectional sleeve antenna.
class AntennaSelection {
  public:
    static AntennaSelection omni() { return AntennaSelection(0); }
    static AntennaSelection element(int id);

    bool is_omni() const { return id_ == 0; }
    bool is_element() const { return id_ != 0; }

    // Element id in 1..8; throws std::logic_error for the omni selection.
    int id() const;

    // "ant1".."ant8" or "omni".
    std::string to_string() const;
    static AntennaSelection parse(std::string_view text);

    friend bool operator==(const AntennaSelection &a, const AntennaSelection &b) = default;

  private:
    explicit AntennaSelection(int id) : id_(id) {}
    int id_;
};

// The vehicle-mounted array: eight sector elements with strictly increasing
// boresights symmetric about the longitudinal axis, plus one omni element.
class AntennaArray {
  public:
    AntennaArray(std::vector<SectorPattern> elements, OmniPattern omni);

    // Eight elements on the standard boresight raster sharing one pattern
    // parameter set.
    static AntennaArray with_uniform_elements(double peak_gain_dbi,
                                              double half_power_beamwidth_deg,
                                              double floor_gain_dbi, double omni_gain_dbi);

    // Default parameters: peak 11 dBi, beamwidth 45 deg, floor -21 dBi,
    // omni 2 dBi.
    static AntennaArray standard();

    static constexpr int element_count = 8;

    const SectorPattern &element(int id) const;
    const OmniPattern &omni() const { return omni_; }

  private:
    std::vector<SectorPattern> elements_;
    OmniPattern omni_;
};

// Gain of a sector pattern at the given relative bearing, in dBi.
double sector_gain(const SectorPattern &pattern, Angle theta_rel);

// Gain of the selected element (or the omni antenna) at the given relative
// bearing, in dBi.
double array_gain(const AntennaArray &array, const AntennaSelection &selection, Angle theta_rel);

// Element id maximizing array gain at the given relative bearing; exact
// ties resolve to the lowest id.
int best_element_by_gain(const AntennaArray &array, Angle theta_rel);

} // namespace beamsim
