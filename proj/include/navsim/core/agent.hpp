#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "navsim/core/vec2.hpp"

namespace navsim {

enum class AgentClassId : int { Adult = 0, Child = 1, Elder = 2 };

constexpr int kNumAgentClasses = 3;

// Object class parameters: walking speed and the static safety zone radius
// are class properties, the body radius is a nominal footprint.
struct AgentClass {
  AgentClassId id{AgentClassId::Adult};
  double desired_speed{0.6};      // m/s
  double body_radius{0.25};       // m
  double static_zone_radius{1.0};  // d_sz, m
};

inline AgentClass agent_class(AgentClassId id) {
  switch (id) {
    case AgentClassId::Adult:
      return {AgentClassId::Adult, 0.6, 0.25, 1.0};
    case AgentClassId::Child:
      return {AgentClassId::Child, 0.4, 0.18, 1.2};
    case AgentClassId::Elder:
      return {AgentClassId::Elder, 0.1, 0.25, 1.5};
  }
  throw std::invalid_argument("unknown agent class");
}

inline const char* agent_class_name(AgentClassId id) {
  switch (id) {
    case AgentClassId::Adult: return "adult";
    case AgentClassId::Child: return "child";
    case AgentClassId::Elder: return "elder";
  }
  return "unknown";
}

inline AgentClassId agent_class_from_name(const std::string& name) {
  if (name == "adult") return AgentClassId::Adult;
  if (name == "child") return AgentClassId::Child;
  if (name == "elder") return AgentClassId::Elder;
  throw std::invalid_argument("unknown agent class name: " + name);
}

struct PedestrianState {
  int id{0};
  AgentClass cls{};
  Vec2 position;
  Vec2 velocity;              // m/s
  double heading{0.0};        // rad, used as zone orientation fallback at rest
  std::vector<Vec2> waypoints;
  size_t waypoint_index{0};   // waypoint lists loop

  const Vec2& current_waypoint() const { return waypoints[waypoint_index % waypoints.size()]; }
};

struct RobotState {
  Vec2 position;
  double heading{0.0};        // rad
  double v_linear{0.0};       // m/s, commanded
  double v_angular{0.0};      // rad/s, commanded
  double radius{0.3};         // d_r, m
  Vec2 goal;

  double goal_distance() const { return (position - goal).norm(); }
};

// Action-space bounds (continuous twist command).
constexpr double kVLinearMin = 0.0;
constexpr double kVLinearMax = 0.6;          // m/s
constexpr double kVAngularMax = M_PI / 6.0;  // rad/s

struct Action {
  double v_linear{0.0};
  double v_angular{0.0};

  bool in_bounds() const {
    return v_linear >= kVLinearMin && v_linear <= kVLinearMax &&
           v_angular >= -kVAngularMax && v_angular <= kVAngularMax;
  }
};

}  // namespace navsim
