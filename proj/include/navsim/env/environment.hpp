#pragma once

#include "navsim/core/robot.hpp"
#include "navsim/core/social_force.hpp"
#include "navsim/env/scenario.hpp"
#include "navsim/reward/rewards.hpp"

namespace navsim {

enum class TerminationCause : int { Running = 0, Goal = 1, Collision = 2, Timeout = 3 };

inline const char* termination_cause_name(TerminationCause c) {
  switch (c) {
    case TerminationCause::Running: return "running";
    case TerminationCause::Goal: return "goal";
    case TerminationCause::Collision: return "collision";
    case TerminationCause::Timeout: return "timeout";
  }
  return "unknown";
}

struct TaskConstraints {
  double d_goal{0.3};    // goal radius, m
  double d_r{0.3};       // robot radius, m
  double timeout{60.0};  // s (600 steps at dt = 0.1)
};

struct StepResult {
  Observation observation;
  RewardBreakdown reward;
  bool done{false};
  TerminationCause cause{TerminationCause::Running};
};

// POMDP episode engine: owns one World at a time, applies the transition
// (pedestrians, then robot), rebuilds the observation and evaluates the
// constraints in the order collision -> goal -> timeout.
class Environment {
 public:
  Environment(ZoneModel zone_model, RewardSystem reward_system,
              TaskConstraints constraints = {}, RewardConfig reward_config = {},
              SfmParams sfm = {})
      : zone_model_(zone_model),
        reward_system_(reward_system),
        constraints_(constraints),
        sfm_(sfm) {
    reward_config_ = reward_config;
    reward_config_.d_goal = constraints_.d_goal;
  }

  Observation reset(const Scenario& scenario) {
    validate_scenario(scenario, constraints_.d_r);
    world_ = World{};
    world_.map = scenario.map;
    world_.robot.position = scenario.robot_start;
    world_.robot.heading = scenario.robot_heading;
    world_.robot.radius = constraints_.d_r;
    world_.robot.goal = scenario.robot_goal;
    int next_id = 0;
    for (const auto& spec : scenario.peds) {
      PedestrianState p;
      p.id = next_id++;
      p.cls = agent_class(spec.cls);
      p.position = spec.start;
      p.waypoints = spec.waypoints;
      const Vec2 to_wp = p.current_waypoint() - p.position;
      if (to_wp.norm() > 1e-9) p.heading = std::atan2(to_wp.y, to_wp.x);
      world_.pedestrians.push_back(p);
    }
    done_ = false;
    cause_ = TerminationCause::Running;
    prev_goal_distance_ = world_.robot.goal_distance();
    return build_observation(world_, zone_model_, 0.0);
  }

  StepResult step(const Action& action) {
    if (done_) throw std::logic_error("Environment::step called after episode end");
    const double dt = world_.step_dt;
    step_pedestrians(world_, dt, sfm_);
    step_robot(world_, action, dt);
    world_.advance_clock();

    StepResult result;
    result.observation =
        build_observation(world_, zone_model_, world_.sim_time / constraints_.timeout);
    result.reward = reward_total(world_, result.observation, prev_goal_distance_,
                                 reward_system_, world_.sim_time, reward_config_);
    prev_goal_distance_ = world_.robot.goal_distance();

    const long timeout_steps = std::lround(constraints_.timeout / world_.step_dt);
    if (check_collision(result.observation.lidar, world_.robot.radius)) {
      result.cause = TerminationCause::Collision;
    } else if (world_.robot.goal_distance() < constraints_.d_goal) {
      result.cause = TerminationCause::Goal;
    } else if (world_.step_count >= timeout_steps) {
      result.cause = TerminationCause::Timeout;
    }
    result.done = result.cause != TerminationCause::Running;
    done_ = result.done;
    cause_ = result.cause;
    return result;
  }

  const World& world() const { return world_; }
  bool done() const { return done_; }
  TerminationCause cause() const { return cause_; }
  ZoneModel zone_model() const { return zone_model_; }
  RewardSystem reward_system() const { return reward_system_; }
  const TaskConstraints& constraints() const { return constraints_; }

 private:
  ZoneModel zone_model_;
  RewardSystem reward_system_;
  TaskConstraints constraints_;
  RewardConfig reward_config_;
  SfmParams sfm_;
  World world_;
  bool done_{true};
  TerminationCause cause_{TerminationCause::Running};
  double prev_goal_distance_{0.0};
};

}  // namespace navsim
