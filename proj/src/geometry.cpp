// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/geometry.hpp"

#include <cmath>

namespace beamsim {

double normalize_angle(double degrees)
{
    if (!std::isfinite(degrees))
        throw std::invalid_argument("normalize_angle: angle must be finite");

    double r = std::fmod(degrees, 360.0);
    if (r <= -180.0)
        r += 360.0;
    else if (r > 180.0)
        r -= 360.0;
    return r;
}

double distance(const Position &a, const Position &b)
{
    return (a.vec() - b.vec()).norm();
}

double horizontal_distance(const Position &a, const Position &b)
{
    return std::hypot(b.east - a.east, b.north - a.north);
}

Angle bearing(const Position &from, const Position &to)
{
    const double de = to.east - from.east;
    const double dn = to.north - from.north;
    if (de == 0.0 && dn == 0.0)
        throw DegenerateGeometryError("bearing: positions are horizontally coincident");

    // atan2 of (east, north) yields the compass convention directly.
    return Angle(std::atan2(de, dn) * 180.0 / M_PI);
}

Angle relative_bearing(const Position &own, Angle heading, const Position &remote)
{
    return Angle(bearing(own, remote).degrees() - heading.degrees());
}

} // namespace beamsim
