#pragma once

#include <cmath>
#include <utility>

#include "navsim/core/agent.hpp"

namespace navsim {

enum class ZoneModel : int { None = 0, Static = 1, Dynamic = 2 };

// Fixed class-specific danger disc.
struct StaticZone {
  double radius{1.0};  // d_sz, m
};

inline StaticZone static_zone_for(const PedestrianState& ped) {
  return {ped.cls.static_zone_radius};
}

// Velocity-scaled sector: length grows linearly with speed, angular width
// shrinks exponentially towards pi/6.
struct DynamicZone {
  double length{0.0};       // d_dz, m
  double angle{0.0};        // full sector angle theta, rad
  double orientation{0.0};  // rad, velocity direction (heading at rest)
  double r_static{0.0};     // class static radius, m
  double k_v{1.5};
  double a_v{1.5};
};

inline double dynamic_zone_length(double speed, double r_static, double k_v = 1.5) {
  return k_v * speed + r_static;
}

inline double dynamic_zone_angle(double speed, double a_v = 1.5) {
  return (11.0 * M_PI / 6.0) * std::exp(-1.4 * a_v * speed) + M_PI / 6.0;
}

inline DynamicZone dynamic_zone_for(const PedestrianState& ped) {
  DynamicZone z;
  z.r_static = ped.cls.static_zone_radius;
  const double speed = ped.velocity.norm();
  z.length = dynamic_zone_length(speed, z.r_static, z.k_v);
  z.angle = dynamic_zone_angle(speed, z.a_v);
  z.orientation = speed > 0.0 ? std::atan2(ped.velocity.y, ped.velocity.x) : ped.heading;
  if (speed == 0.0) z.angle = 2.0 * M_PI;  // full disc at rest
  return z;
}

// Static zone membership: center-to-center distance strictly inside d_sz.
inline bool in_static_zone(const RobotState& robot, const PedestrianState& ped) {
  const double d_ah = (robot.position - ped.position).norm();
  return d_ah < ped.cls.static_zone_radius;
}

struct DynamicZoneCheck {
  bool inside{false};
  double clearance{0.0};  // d_c = d_ah - R - d_r, m
};

// Membership needs both the clearance test d_c < d_dz - R and the bearing
// from pedestrian to robot inside the sector (half-angle each side of the
// zone orientation).
inline DynamicZoneCheck in_dynamic_zone(const RobotState& robot, const PedestrianState& ped) {
  const DynamicZone zone = dynamic_zone_for(ped);
  const Vec2 rel = robot.position - ped.position;
  const double d_ah = rel.norm();
  DynamicZoneCheck out;
  out.clearance = d_ah - ped.cls.body_radius - robot.radius;
  if (out.clearance >= zone.length - ped.cls.body_radius) return out;
  const double bearing = std::atan2(rel.y, rel.x);
  const double off = std::abs(wrap_angle(bearing - zone.orientation));
  out.inside = off <= zone.angle / 2.0;
  return out;
}

}  // namespace navsim
