#pragma once

#include <cmath>
#include <stdexcept>

#include "navsim/core/world.hpp"

namespace navsim {

// Helbing-style social force parameters at pedestrian scale.
struct SfmParams {
  double relaxation_time{0.5};   // tau, s
  double repulsion_strength{2.0};  // A, m/s^2
  double repulsion_range{0.35};    // B, m
  double waypoint_radius{0.3};     // m
  double speed_overshoot{1.3};     // |v| <= overshoot * desired_speed
  bool robot_is_repulsive{true};   // pedestrians avoid the robot collaboratively
};

namespace detail {

inline Vec2 goal_force(const PedestrianState& p, const SfmParams& prm) {
  const Vec2 to_wp = p.current_waypoint() - p.position;
  const double dist = to_wp.norm();
  // At the waypoint there is nothing to chase; relax towards rest.
  const Vec2 desired =
      dist > 1e-9 ? to_wp * (p.cls.desired_speed / dist) : Vec2{0.0, 0.0};
  return (desired - p.velocity) / prm.relaxation_time;
}

inline Vec2 agent_repulsion(const Vec2& pos_i, double radius_i, const Vec2& pos_j,
                            double radius_j, const SfmParams& prm) {
  const Vec2 diff = pos_i - pos_j;
  const double d = diff.norm();
  if (d < 1e-12) {
    throw std::runtime_error("social force: degenerate configuration, two agents at identical positions");
  }
  const double magnitude =
      prm.repulsion_strength * std::exp((radius_i + radius_j - d) / prm.repulsion_range);
  return diff * (magnitude / d);
}

inline Vec2 wall_repulsion(const PedestrianState& p, const std::vector<Segment>& segs,
                           const SfmParams& prm) {
  Vec2 force{0.0, 0.0};
  for (const auto& s : segs) {
    const Vec2 cp = closest_point_on_segment(s, p.position);
    const Vec2 diff = p.position - cp;
    const double d = diff.norm();
    if (d < 1e-12) continue;  // exactly on the wall line, direction undefined
    const double magnitude =
        prm.repulsion_strength * std::exp((p.cls.body_radius - d) / prm.repulsion_range);
    force += diff * (magnitude / d);
  }
  return force;
}

// Push the body out of any wall it ended up intersecting and kill the
// velocity component into the wall; keeps penetration at zero.
inline void resolve_wall_contact(PedestrianState& p, const std::vector<Segment>& segs) {
  for (const auto& s : segs) {
    const Vec2 cp = closest_point_on_segment(s, p.position);
    const Vec2 diff = p.position - cp;
    const double d = diff.norm();
    if (d >= p.cls.body_radius || d < 1e-12) continue;
    const Vec2 n = diff / d;
    p.position = cp + n * p.cls.body_radius;
    const double vn = p.velocity.dot(n);
    if (vn < 0.0) p.velocity -= n * vn;
  }
}

}  // namespace detail

// Advance all pedestrians by dt with goal attraction plus exponential
// pedestrian/wall/robot repulsion, semi-implicit Euler integration.
inline void step_pedestrians(World& world, double dt, const SfmParams& prm = {}) {
  if (dt <= 0.0) throw std::invalid_argument("step_pedestrians: dt must be > 0");
  const auto segs = world.map.solid_segments();
  std::vector<Vec2> forces(world.pedestrians.size());

  for (size_t i = 0; i < world.pedestrians.size(); ++i) {
    const auto& p = world.pedestrians[i];
    if (p.waypoints.empty()) throw std::invalid_argument("step_pedestrians: pedestrian without waypoints");
    Vec2 f = detail::goal_force(p, prm);
    for (size_t j = 0; j < world.pedestrians.size(); ++j) {
      if (j == i) continue;
      const auto& q = world.pedestrians[j];
      f += detail::agent_repulsion(p.position, p.cls.body_radius, q.position,
                                   q.cls.body_radius, prm);
    }
    if (prm.robot_is_repulsive) {
      f += detail::agent_repulsion(p.position, p.cls.body_radius, world.robot.position,
                                   world.robot.radius, prm);
    }
    f += detail::wall_repulsion(p, segs, prm);
    if (!std::isfinite(f.x) || !std::isfinite(f.y)) {
      throw std::runtime_error("social force: non-finite force on pedestrian " + std::to_string(p.id));
    }
    forces[i] = f;
  }

  for (size_t i = 0; i < world.pedestrians.size(); ++i) {
    auto& p = world.pedestrians[i];
    p.velocity += forces[i] * dt;
    const double vmax = prm.speed_overshoot * p.cls.desired_speed;
    const double speed = p.velocity.norm();
    if (speed > vmax) p.velocity = p.velocity * (vmax / speed);
    p.position += p.velocity * dt;
    detail::resolve_wall_contact(p, segs);
    if (speed > 1e-9) p.heading = std::atan2(p.velocity.y, p.velocity.x);
    if ((p.current_waypoint() - p.position).norm() < prm.waypoint_radius) {
      p.waypoint_index = (p.waypoint_index + 1) % p.waypoints.size();
    }
  }
}

}  // namespace navsim
