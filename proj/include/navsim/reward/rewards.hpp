#pragma once

#include <cmath>
#include <stdexcept>

#include "navsim/sense/observation.hpp"

namespace navsim {

enum class RewardSystem : int { Raw = 0, StaticZone = 1, DynamicZone = 2 };

struct RewardConfig {
  double r_arrival{2.0};
  double r_collision{-4.0};
  double w_p_scale{0.018};          // w_p(t) = w_p_scale * e^(1 - t)
  double w_s{-0.03};                // stationary
  double w_n{-0.14};                // moving away
  double k_sz{-0.08};               // static zone exponential factor
  double dz_contact_penalty{0.15};  // dynamic zone penalty at surface contact
  double d_goal{0.3};               // goal radius, m
  double progress_epsilon{1e-9};    // |d^t| below this counts as stationary
};

// Per-step sub-reward values; total is the sum of the populated terms.
struct RewardBreakdown {
  double r_s{0.0};
  double r_c{0.0};
  double r_p{0.0};
  double r_sz{0.0};
  double r_dz{0.0};
  double total{0.0};
};

inline double reward_success(const RobotState& robot, const RewardConfig& cfg = {}) {
  return robot.goal_distance() < cfg.d_goal ? cfg.r_arrival : 0.0;
}

inline double reward_collision(const LidarScan& scan, double robot_radius,
                               const RewardConfig& cfg = {}) {
  return scan.min() < robot_radius ? cfg.r_collision : 0.0;
}

// Progress term of the base reward; t is elapsed episode time in seconds.
inline double reward_progress(double d_ag_prev, double d_ag_now, double t,
                              const RewardConfig& cfg = {}) {
  const double delta = d_ag_prev - d_ag_now;
  if (delta > cfg.progress_epsilon) return cfg.w_p_scale * std::exp(1.0 - t);
  if (delta >= -cfg.progress_epsilon) return cfg.w_s;
  return cfg.w_n;
}

// Exponential penalty once inside the static zone, zero outside.
inline double reward_static_zone(double d_ah, double r_sz, const RewardConfig& cfg = {}) {
  if (r_sz <= 0.0) throw std::invalid_argument("reward_static_zone: r_sz must be > 0");
  if (d_ah >= r_sz) return 0.0;
  return cfg.k_sz * std::exp(1.0 - d_ah / r_sz);
}

// Linear penalty inside the dynamic zone: contact penalty at d_c = 0,
// vanishing at the zone boundary d_c = d_dz - R.
inline double reward_dynamic_zone(double d_c, double d_dz, double body_radius, bool inside,
                                  const RewardConfig& cfg = {}) {
  if (!inside) return 0.0;
  const double span = d_dz - body_radius;
  if (span <= 0.0) {
    throw std::invalid_argument("reward_dynamic_zone: zone shorter than the body radius");
  }
  return -(d_c * (-cfg.dz_contact_penalty / span) + cfg.dz_contact_penalty);
}

// Full step reward under the selected system. d_ag_prev is the goal distance
// before the step; zone penalties sum over every violating pedestrian.
inline RewardBreakdown reward_total(const World& world, const Observation& obs,
                                    double d_ag_prev, RewardSystem system, double t,
                                    const RewardConfig& cfg = {}) {
  RewardBreakdown out;
  out.r_s = reward_success(world.robot, cfg);
  out.r_c = reward_collision(obs.lidar, world.robot.radius, cfg);
  out.r_p = reward_progress(d_ag_prev, world.robot.goal_distance(), t, cfg);

  if (system == RewardSystem::StaticZone) {
    for (const auto& p : world.pedestrians) {
      const double d_ah = (world.robot.position - p.position).norm();
      out.r_sz += reward_static_zone(d_ah, p.cls.static_zone_radius, cfg);
    }
  } else if (system == RewardSystem::DynamicZone) {
    for (const auto& p : world.pedestrians) {
      const auto check = in_dynamic_zone(world.robot, p);
      if (!check.inside) continue;
      const auto zone = dynamic_zone_for(p);
      out.r_dz += reward_dynamic_zone(check.clearance, zone.length, p.cls.body_radius,
                                      true, cfg);
    }
  }
  out.total = out.r_s + out.r_c + out.r_p + out.r_sz + out.r_dz;
  return out;
}

}  // namespace navsim
