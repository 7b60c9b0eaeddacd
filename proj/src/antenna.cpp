// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beamsim {

Angle element_boresight(int id)
{
    if (id < 1 || id > AntennaArray::element_count)
        throw std::invalid_argument("element_boresight: id must be in 1..8");
    return Angle((static_cast<double>(id) - 4.5) * 15.0);
}

AntennaSelection AntennaSelection::element(int id)
{
    if (id < 1 || id > AntennaArray::element_count)
        throw std::invalid_argument("AntennaSelection: element id must be in 1..8");
    return AntennaSelection(id);
}

int AntennaSelection::id() const
{
    if (is_omni())
        throw std::logic_error("AntennaSelection: omni selection has no element id");
    return id_;
}

std::string AntennaSelection::to_string() const
{
    return is_omni() ? "omni" : "ant" + std::to_string(id_);
}

AntennaSelection AntennaSelection::parse(std::string_view text)
{
    if (text == "omni")
        return omni();
    if (text.size() == 4 && text.substr(0, 3) == "ant" && text[3] >= '1' && text[3] <= '8')
        return element(text[3] - '0');
    throw std::invalid_argument("AntennaSelection: expected \"ant1\"..\"ant8\" or \"omni\", got \"" +
                                std::string(text) + "\"");
}

AntennaArray::AntennaArray(std::vector<SectorPattern> elements, OmniPattern omni)
    : elements_(std::move(elements)), omni_(omni)
{
    if (elements_.size() != static_cast<std::size_t>(element_count))
        throw std::invalid_argument("AntennaArray: exactly 8 sector elements required");
    if (!std::isfinite(omni_.gain_dbi))
        throw std::invalid_argument("AntennaArray: omni gain must be finite");

    for (int id = 1; id <= element_count; ++id) {
        const SectorPattern &p = elements_[static_cast<std::size_t>(id - 1)];
        if (!(p.peak_gain_dbi > p.floor_gain_dbi))
            throw std::invalid_argument("AntennaArray: peak gain must exceed floor gain");
        if (!(p.half_power_beamwidth_deg > 0.0) || !(p.half_power_beamwidth_deg < 180.0))
            throw std::invalid_argument("AntennaArray: half-power beamwidth must be in (0, 180)");
        if (id > 1) {
            const double prev = elements_[static_cast<std::size_t>(id - 2)].boresight.degrees();
            if (!(p.boresight.degrees() > prev))
                throw std::invalid_argument("AntennaArray: boresights must strictly increase with id");
        }
    }
    for (int id = 1; id <= element_count; ++id) {
        const double lo = elements_[static_cast<std::size_t>(id - 1)].boresight.degrees();
        const double hi = elements_[static_cast<std::size_t>(element_count - id)].boresight.degrees();
        if (std::abs(lo + hi) > 1e-9)
            throw std::invalid_argument("AntennaArray: boresights must be symmetric about 0 deg");
    }
}

AntennaArray AntennaArray::with_uniform_elements(double peak_gain_dbi,
                                                 double half_power_beamwidth_deg,
                                                 double floor_gain_dbi, double omni_gain_dbi)
{
    std::vector<SectorPattern> elements;
    elements.reserve(element_count);
    for (int id = 1; id <= element_count; ++id)
        elements.push_back({peak_gain_dbi, element_boresight(id), half_power_beamwidth_deg,
                            floor_gain_dbi});
    return AntennaArray(std::move(elements), OmniPattern{omni_gain_dbi});
}

AntennaArray AntennaArray::standard()
{
    return with_uniform_elements(11.0, 45.0, -21.0, 2.0);
}

const SectorPattern &AntennaArray::element(int id) const
{
    if (id < 1 || id > element_count)
        throw std::invalid_argument("AntennaArray: element id must be in 1..8");
    return elements_[static_cast<std::size_t>(id - 1)];
}

double sector_gain(const SectorPattern &pattern, Angle theta_rel)
{
    const double off = normalize_angle(theta_rel.degrees() - pattern.boresight.degrees());
    const double parabola = 12.0 * (off / pattern.half_power_beamwidth_deg) *
                            (off / pattern.half_power_beamwidth_deg);
    const double attenuation = std::min(parabola, pattern.peak_gain_dbi - pattern.floor_gain_dbi);
    return pattern.peak_gain_dbi - attenuation;
}

double array_gain(const AntennaArray &array, const AntennaSelection &selection, Angle theta_rel)
{
    if (selection.is_omni())
        return array.omni().gain_dbi;
    return sector_gain(array.element(selection.id()), theta_rel);
}

int best_element_by_gain(const AntennaArray &array, Angle theta_rel)
{
    int best_id = 1;
    double best = sector_gain(array.element(1), theta_rel);
    for (int id = 2; id <= AntennaArray::element_count; ++id) {
        const double g = sector_gain(array.element(id), theta_rel);
        if (g > best) {
            best = g;
            best_id = id;
        }
    }
    return best_id;
}

} // namespace beamsim
