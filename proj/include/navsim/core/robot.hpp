#pragma once

#include <cmath>
#include <stdexcept>

#include "navsim/core/world.hpp"

namespace navsim {

// Unicycle update: rotate first, then advance along the new heading.
// Out-of-bounds commands are rejected, never clamped silently.
inline void step_robot(World& world, const Action& action, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("step_robot: dt must be > 0");
  if (!action.in_bounds()) {
    throw std::invalid_argument("step_robot: action outside [0,0.6] x [-pi/6,pi/6]");
  }
  auto& r = world.robot;
  r.heading = wrap_angle(r.heading + action.v_angular * dt);
  r.position += Vec2{std::cos(r.heading), std::sin(r.heading)} * (action.v_linear * dt);
  r.v_linear = action.v_linear;
  r.v_angular = action.v_angular;
}

}  // namespace navsim
