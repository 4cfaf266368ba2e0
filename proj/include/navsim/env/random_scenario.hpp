#pragma once

#include "navsim/core/rng.hpp"
#include "navsim/env/curriculum.hpp"
#include "navsim/env/scenario.hpp"

namespace navsim {

namespace detail {

inline Vec2 sample_free_point(const MapGeometry& map, double radius, Rng& rng,
                              int max_attempts = 1000) {
  for (int i = 0; i < max_attempts; ++i) {
    const Vec2 p{rng.uniform(map.bounds.xmin + radius, map.bounds.xmax - radius),
                 rng.uniform(map.bounds.ymin + radius, map.bounds.ymax - radius)};
    if (point_free(map, p, radius)) return p;
  }
  throw ScenarioError("random scenario: no free point after 1000 attempts");
}

}  // namespace detail

// Randomized episode layout: robot start, goal, and a stage-sized roster
// placed by rejection sampling. Same seed, same scenario.
inline Scenario sample_random_scenario(const MapGeometry& map, uint64_t seed,
                                       const CurriculumStage& stage,
                                       double robot_radius = 0.3) {
  Rng rng(seed);
  Scenario sc;
  sc.map = map;
  sc.seed = seed;
  sc.name = "random-" + std::to_string(seed);

  const double diag = std::hypot(map.bounds.xmax - map.bounds.xmin,
                                 map.bounds.ymax - map.bounds.ymin);
  const double min_goal_sep = std::min(5.0, 0.4 * diag);
  sc.robot_start = detail::sample_free_point(map, robot_radius, rng);
  sc.robot_heading = rng.uniform(-M_PI, M_PI);
  bool goal_ok = false;
  for (int i = 0; i < 1000 && !goal_ok; ++i) {
    sc.robot_goal = detail::sample_free_point(map, robot_radius, rng);
    goal_ok = (sc.robot_goal - sc.robot_start).norm() >= min_goal_sep &&
              (detail::straight_line_free(map, sc.robot_start, sc.robot_goal, robot_radius) ||
               detail::goal_reachable(map, sc.robot_start, sc.robot_goal, robot_radius));
  }
  if (!goal_ok) throw ScenarioError("random scenario: no reachable goal after 1000 attempts");

  std::array<int, kNumAgentClasses> counts{};
  if (stage.class_counts) {
    counts = *stage.class_counts;
  } else {
    for (int i = 0; i < stage.pedestrian_count; ++i) {
      counts[rng.uniform_index(kNumAgentClasses)] += 1;
    }
  }

  for (int c = 0; c < kNumAgentClasses; ++c) {
    const AgentClass cls = agent_class(static_cast<AgentClassId>(c));
    for (int i = 0; i < counts[static_cast<size_t>(c)]; ++i) {
      PedestrianSpec ped;
      ped.cls = cls.id;
      bool placed = false;
      for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
        ped.start = detail::sample_free_point(map, cls.body_radius, rng);
        placed = (ped.start - sc.robot_start).norm() >= cls.body_radius + robot_radius + 0.5;
        for (const auto& other : sc.peds) {
          const double min_sep = cls.body_radius + agent_class(other.cls).body_radius;
          if ((ped.start - other.start).norm() < min_sep) placed = false;
        }
      }
      if (!placed) throw ScenarioError("random scenario: pedestrian placement failed, map too small for roster");
      const int n_wp = 2 + static_cast<int>(rng.uniform_index(3));
      for (int w = 0; w < n_wp; ++w) {
        ped.waypoints.push_back(detail::sample_free_point(map, cls.body_radius, rng));
      }
      sc.peds.push_back(ped);
    }
  }
  return sc;
}

}  // namespace navsim
