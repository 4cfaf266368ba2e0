#pragma once

#include <algorithm>
#include <vector>

#include "navsim/sense/lidar.hpp"
#include "navsim/zones/zones.hpp"

namespace navsim {

constexpr double kSensingRadius = 4.0;  // m, semantic list cutoff
constexpr int kMaxTrackedHumans = 10;   // N_max

// Per-human semantic state s_p.
struct SemanticHumanState {
  Vec2 rel_position;       // (p~x, p~y), robot frame
  double body_radius{0.0};  // r_h
  double distance{0.0};     // d_ah, center-to-center
  double zone_radius{0.0};  // r_z from the active zone model
  double combined_clearance{0.0};  // r_a + r_z
  int class_id{0};
  int ped_id{0};
};

// Robot self-state s_r.
struct SemanticRobotState {
  double goal_distance{0.0};  // d_ag
  Vec2 position;
  double v_linear{0.0};
  double v_angular{0.0};
  double radius{0.0};  // r_a
};

struct Observation {
  LidarScan lidar;
  std::vector<SemanticHumanState> humans;  // sorted farthest-first
  SemanticRobotState robot;
  Vec2 goal_in_robot_frame;
  double normalized_time{0.0};  // t / timeout, in [0,1]
};

// Assemble O = (O_L, O_S). The N_max nearest pedestrians within the sensing
// radius enter the semantic list, sorted by descending d_ah so a recurrent
// consumer sees the closest human last. Under ZoneModel::None the semantic
// list stays empty (sensor-only baseline).
inline Observation build_observation(const World& world, ZoneModel zone_model,
                                     double normalized_time = 0.0) {
  Observation obs;
  obs.lidar = raycast(world);
  obs.normalized_time = std::clamp(normalized_time, 0.0, 1.0);

  const auto& r = world.robot;
  obs.robot.goal_distance = r.goal_distance();
  obs.robot.position = r.position;
  obs.robot.v_linear = r.v_linear;
  obs.robot.v_angular = r.v_angular;
  obs.robot.radius = r.radius;
  obs.goal_in_robot_frame = (r.goal - r.position).rotated(-r.heading);

  if (zone_model == ZoneModel::None) return obs;

  for (const auto& p : world.pedestrians) {
    const Vec2 rel = p.position - r.position;
    const double d_ah = rel.norm();
    if (d_ah > kSensingRadius) continue;
    SemanticHumanState s;
    s.rel_position = rel.rotated(-r.heading);
    s.body_radius = p.cls.body_radius;
    s.distance = d_ah;
    s.zone_radius = zone_model == ZoneModel::Static ? static_zone_for(p).radius
                                                    : dynamic_zone_for(p).length;
    s.combined_clearance = r.radius + s.zone_radius;
    s.class_id = static_cast<int>(p.cls.id);
    s.ped_id = p.id;
    obs.humans.push_back(s);
  }

  // Farthest first; ties broken by lower class id, then pedestrian id.
  std::sort(obs.humans.begin(), obs.humans.end(),
            [](const SemanticHumanState& a, const SemanticHumanState& b) {
              if (a.distance != b.distance) return a.distance > b.distance;
              if (a.class_id != b.class_id) return a.class_id < b.class_id;
              return a.ped_id < b.ped_id;
            });
  if (obs.humans.size() > kMaxTrackedHumans) {
    obs.humans.erase(obs.humans.begin(),
                     obs.humans.end() - kMaxTrackedHumans);
  }
  return obs;
}

}  // namespace navsim
