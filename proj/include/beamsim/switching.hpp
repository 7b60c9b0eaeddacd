// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#pragma once

#include "beamsim/antenna.hpp"
#include "beamsim/geometry.hpp"

namespace beamsim {

// Geolocation-based selection rule: a sector element is activated while
// the remote station lies within +/- activation_halfwidth of the vehicle
// axis (boundary inclusive), the omni antenna otherwise.
struct SwitchPolicy
{
    double activation_halfwidth_deg = 100.0;
};

// Solid-state RF switch constants. Isolation is informational and does not
// enter the received-power computation.
struct SwitchModel
{
    double latency_s = 150e-9;
    double insertion_loss_db = 2.5;
    double isolation_db = 30.0;
};

// State of the switch over time. A transition requested at time t
// completes at t + latency; queries inside that window report the previous
// selection.
class SwitchState {
  public:
    SwitchState();

    const AntennaSelection &active() const { return active_; }
    const AntennaSelection &previous() const { return previous_; }

    // Completion time of the most recent transition.
    double last_switch_time() const { return switch_complete_s_; }
    int switch_count() const { return switch_count_; }

    AntennaSelection selection_at(double t_s) const;
    bool is_switching(double t_s) const;

  private:
    friend SwitchState apply_switch(const SwitchState &state, const SwitchModel &model,
                                    const AntennaSelection &desired, double now_s);

    AntennaSelection active_;
    AntennaSelection previous_;
    double switch_start_s_;
    double switch_complete_s_;
    double last_update_s_;
    int switch_count_;
};

// Selection for a remote station at the given relative bearing: the
// nearest-boresight element inside the activation window (lowest id on
// exact ties), omni outside it.
AntennaSelection select_antenna(const SwitchPolicy &policy, const AntennaArray &array,
                                Angle theta_rel);

// Pure state transition. A changed selection bumps the switch count and
// schedules completion at now + latency; an unchanged selection is a
// no-op. Throws std::invalid_argument when now precedes an earlier update.
SwitchState apply_switch(const SwitchState &state, const SwitchModel &model,
                         const AntennaSelection &desired, double now_s);

} // namespace beamsim
