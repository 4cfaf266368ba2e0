#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "navsim/core/world.hpp"

namespace navsim {

constexpr int kLidarBeams = 360;
constexpr double kLidarMaxRange = 3.5;  // m

// 2D scan ring; beam k points at angle 2*pi*k/360 in the robot frame.
struct LidarScan {
  std::array<double, kLidarBeams> ranges{};
  double max_range{kLidarMaxRange};

  double min() const { return *std::min_element(ranges.begin(), ranges.end()); }
};

// Distance from robot center to the nearest wall segment or pedestrian
// circle along each beam, clamped to max_range. Beams starting inside an
// obstacle report 0 so that collision logic fires.
inline LidarScan raycast(const World& world, double max_range = kLidarMaxRange) {
  LidarScan scan;
  scan.max_range = max_range;
  const Vec2 origin = world.robot.position;
  const auto segs = world.map.solid_segments();
  const bool inside_block = world.map.inside_obstacle(origin);

  for (int k = 0; k < kLidarBeams; ++k) {
    const double angle = world.robot.heading + 2.0 * M_PI * k / kLidarBeams;
    const Vec2 dir{std::cos(angle), std::sin(angle)};
    double best = max_range;
    if (inside_block) {
      scan.ranges[k] = 0.0;
      continue;
    }
    for (const auto& s : segs) {
      if (auto t = ray_segment_intersection(origin, dir, s)) best = std::min(best, *t);
    }
    for (const auto& p : world.pedestrians) {
      if (auto t = ray_circle_intersection(origin, dir, p.position, p.cls.body_radius)) {
        best = std::min(best, *t);
      }
    }
    scan.ranges[k] = best;
  }
  return scan;
}

// Collision predicate of the task constraints: strictly inside the hull.
inline bool check_collision(const LidarScan& scan, double robot_radius) {
  return scan.min() < robot_radius;
}

inline bool check_collision(const World& world) {
  return check_collision(raycast(world), world.robot.radius);
}

}  // namespace navsim
