// SPDX-License-Identifier: Apache-2.0
//
// beamsim: switched sector-antenna array simulation toolkit for V2X links

#include "beamsim/switching.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace beamsim {

SwitchState::SwitchState()
    : active_(AntennaSelection::omni()), previous_(AntennaSelection::omni()),
      switch_start_s_(-std::numeric_limits<double>::infinity()),
      switch_complete_s_(-std::numeric_limits<double>::infinity()),
      last_update_s_(-std::numeric_limits<double>::infinity()), switch_count_(0)
{
}

AntennaSelection SwitchState::selection_at(double t_s) const
{
    return t_s < switch_complete_s_ ? previous_ : active_;
}

bool SwitchState::is_switching(double t_s) const
{
    return t_s >= switch_start_s_ && t_s < switch_complete_s_;
}

AntennaSelection select_antenna(const SwitchPolicy &policy, const AntennaArray &array,
                                Angle theta_rel)
{
    if (!(policy.activation_halfwidth_deg > 0.0) || policy.activation_halfwidth_deg > 180.0)
        throw std::invalid_argument("select_antenna: activation halfwidth must be in (0, 180]");

    if (std::abs(theta_rel.degrees()) > policy.activation_halfwidth_deg)
        return AntennaSelection::omni();

    int best_id = 1;
    double best = std::abs(
        normalize_angle(theta_rel.degrees() - array.element(1).boresight.degrees()));
    for (int id = 2; id <= AntennaArray::element_count; ++id) {
        const double off = std::abs(
            normalize_angle(theta_rel.degrees() - array.element(id).boresight.degrees()));
        if (off < best) {
            best = off;
            best_id = id;
        }
    }
    return AntennaSelection::element(best_id);
}

SwitchState apply_switch(const SwitchState &state, const SwitchModel &model,
                         const AntennaSelection &desired, double now_s)
{
    if (!std::isfinite(now_s))
        throw std::invalid_argument("apply_switch: time must be finite");
    if (now_s < state.last_update_s_)
        throw std::invalid_argument("apply_switch: time must not regress");
    if (!(model.latency_s >= 0.0))
        throw std::invalid_argument("apply_switch: latency must be non-negative");

    SwitchState next = state;
    next.last_update_s_ = now_s;
    if (desired == state.active_)
        return next;

    next.previous_ = state.active_;
    next.active_ = desired;
    next.switch_start_s_ = now_s;
    next.switch_complete_s_ = now_s + model.latency_s;
    next.switch_count_ = state.switch_count_ + 1;
    return next;
}

} // namespace beamsim
