// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#pragma once

#include <Eigen/Dense>
#include <stdexcept>

namespace beamsim {

// Raised when an operation has no geometric answer, e.g. the bearing
// between two horizontally coincident points.
class DegenerateGeometryError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

// Local East-North-Up position in meters. Heights default to the 1.80 m
// antenna mount height used throughout the shipped scenarios.
struct Position
{
    double east = 0.0;
    double north = 0.0;
    double height = 1.80;

    Eigen::Vector3d vec() const { return {east, north, height}; }
};

// Maps any finite angle in degrees onto (-180, +180], with +180 as the
// canonical boundary representative. Throws std::invalid_argument on
// non-finite input.
double normalize_angle(double degrees);

// Compass angle in degrees, kept normalized to (-180, +180].
class Angle {
  public:
    Angle() = default;
    Angle(double degrees) : deg_(normalize_angle(degrees)) {}

    double degrees() const { return deg_; }

    friend bool operator==(const Angle &a, const Angle &b) { return a.deg_ == b.deg_; }

  private:
    double deg_ = 0.0;
};

// 3D Euclidean distance in meters.
double distance(const Position &a, const Position &b);

// Distance between the horizontal projections, ignoring height.
double horizontal_distance(const Position &a, const Position &b);

// Compass bearing from one position to another: 0 deg = north, positive
// clockwise, east = +90 deg. Throws DegenerateGeometryError when the
// horizontal projections coincide.
Angle bearing(const Position &from, const Position &to);

// Angle of the remote position measured from the own heading axis,
// positive when the remote lies to the right.
Angle relative_bearing(const Position &own, Angle heading, const Position &remote);

} // namespace beamsim
