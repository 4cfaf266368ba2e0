#pragma once

#include <cstdint>
#include <deque>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "navsim/core/world.hpp"

namespace navsim {

// Invalid input: bad scenario files, unsatisfiable placement, bad config.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kScenarioVersion = 1;

struct PedestrianSpec {
  AgentClassId cls{AgentClassId::Adult};
  Vec2 start;
  std::vector<Vec2> waypoints;
};

struct Scenario {
  std::string name;
  MapGeometry map;
  Vec2 robot_start;
  double robot_heading{0.0};
  Vec2 robot_goal;
  std::vector<PedestrianSpec> peds;
  uint64_t seed{0};
};

namespace detail {

inline double clearance_to_solids(const MapGeometry& map, const Vec2& p) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& s : map.solid_segments()) best = std::min(best, distance_to_segment(s, p));
  return best;
}

inline bool point_free(const MapGeometry& map, const Vec2& p, double radius) {
  if (p.x < map.bounds.xmin + radius || p.x > map.bounds.xmax - radius ||
      p.y < map.bounds.ymin + radius || p.y > map.bounds.ymax - radius) {
    return false;
  }
  if (map.inside_obstacle(p)) return false;
  return clearance_to_solids(map, p) >= radius;
}

// Coarse grid BFS between start and goal with the robot footprint inflated.
inline bool goal_reachable(const MapGeometry& map, const Vec2& start, const Vec2& goal,
                           double radius, double cell = 0.25) {
  const int nx = std::max(1, static_cast<int>((map.bounds.xmax - map.bounds.xmin) / cell));
  const int ny = std::max(1, static_cast<int>((map.bounds.ymax - map.bounds.ymin) / cell));
  auto to_cell = [&](const Vec2& p) {
    const int cx = std::clamp(static_cast<int>((p.x - map.bounds.xmin) / cell), 0, nx - 1);
    const int cy = std::clamp(static_cast<int>((p.y - map.bounds.ymin) / cell), 0, ny - 1);
    return std::pair<int, int>{cx, cy};
  };
  auto center = [&](int cx, int cy) {
    return Vec2{map.bounds.xmin + (cx + 0.5) * cell, map.bounds.ymin + (cy + 0.5) * cell};
  };
  const auto [sx, sy] = to_cell(start);
  const auto [gx, gy] = to_cell(goal);
  std::vector<char> visited(static_cast<size_t>(nx) * ny, 0);
  std::deque<std::pair<int, int>> queue{{sx, sy}};
  visited[static_cast<size_t>(sy) * nx + sx] = 1;
  while (!queue.empty()) {
    const auto [cx, cy] = queue.front();
    queue.pop_front();
    if (cx == gx && cy == gy) return true;
    const int dx[] = {1, -1, 0, 0};
    const int dy[] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      const int nx2 = cx + dx[k];
      const int ny2 = cy + dy[k];
      if (nx2 < 0 || nx2 >= nx || ny2 < 0 || ny2 >= ny) continue;
      auto& seen = visited[static_cast<size_t>(ny2) * nx + nx2];
      if (seen) continue;
      seen = 1;
      if (!point_free(map, center(nx2, ny2), radius)) continue;
      queue.push_back({nx2, ny2});
    }
  }
  return false;
}

inline bool straight_line_free(const MapGeometry& map, const Vec2& a, const Vec2& b,
                               double radius, double step = 0.1) {
  const double len = (b - a).norm();
  const int n = std::max(1, static_cast<int>(len / step));
  for (int i = 0; i <= n; ++i) {
    if (!point_free(map, a + (b - a) * (static_cast<double>(i) / n), radius)) return false;
  }
  return true;
}

}  // namespace detail

// Checks the scenario invariants; returns the list of violations (empty
// means valid).
inline std::vector<std::string> scenario_problems(const Scenario& sc,
                                                  double robot_radius = 0.3) {
  std::vector<std::string> problems;
  const auto& map = sc.map;
  if (map.bounds.xmax <= map.bounds.xmin || map.bounds.ymax <= map.bounds.ymin) {
    problems.push_back("map bounds are empty");
    return problems;
  }
  if (!detail::point_free(map, sc.robot_start, robot_radius)) {
    problems.push_back("robot start is not collision-free");
  }
  if (!detail::point_free(map, sc.robot_goal, robot_radius)) {
    problems.push_back("goal is not collision-free");
  }
  std::set<int> ids;
  for (size_t i = 0; i < sc.peds.size(); ++i) {
    const auto& ped = sc.peds[i];
    const AgentClass cls = agent_class(ped.cls);
    const std::string tag = "ped " + std::to_string(i);
    if (!detail::point_free(map, ped.start, cls.body_radius)) {
      problems.push_back(tag + " spawns inside a wall or outside the map");
    }
    if ((ped.start - sc.robot_start).norm() < cls.body_radius + robot_radius) {
      problems.push_back(tag + " spawns overlapping the robot");
    }
    if (ped.waypoints.empty()) problems.push_back(tag + " has no waypoints");
    for (const auto& w : ped.waypoints) {
      if (!map.bounds.contains(w)) problems.push_back(tag + " waypoint outside map bounds");
    }
  }
  if (problems.empty() &&
      !detail::straight_line_free(map, sc.robot_start, sc.robot_goal, robot_radius) &&
      !detail::goal_reachable(map, sc.robot_start, sc.robot_goal, robot_radius)) {
    problems.push_back("goal unreachable from robot start");
  }
  return problems;
}

inline void validate_scenario(const Scenario& sc, double robot_radius = 0.3) {
  const auto problems = scenario_problems(sc, robot_radius);
  if (!problems.empty()) {
    std::string msg = "invalid scenario";
    if (!sc.name.empty()) msg += " '" + sc.name + "'";
    for (const auto& p : problems) msg += ": " + p;
    throw ScenarioError(msg);
  }
}

// ---- JSON serialization (documented schema, version field required) ----

inline nlohmann::json scenario_to_json(const Scenario& sc) {
  nlohmann::json j;
  j["version"] = kScenarioVersion;
  j["name"] = sc.name;
  j["map"]["bounds"] = {sc.map.bounds.xmin, sc.map.bounds.ymin, sc.map.bounds.xmax,
                        sc.map.bounds.ymax};
  auto& walls = j["map"]["walls"] = nlohmann::json::array();
  for (const auto& w : sc.map.walls) walls.push_back({w.a.x, w.a.y, w.b.x, w.b.y});
  auto& blocks = j["map"]["obstacles"] = nlohmann::json::array();
  for (const auto& r : sc.map.obstacles) blocks.push_back({r.xmin, r.ymin, r.xmax, r.ymax});
  j["robot"]["start"] = {sc.robot_start.x, sc.robot_start.y, sc.robot_heading};
  j["robot"]["goal"] = {sc.robot_goal.x, sc.robot_goal.y};
  auto& peds = j["peds"] = nlohmann::json::array();
  for (const auto& p : sc.peds) {
    nlohmann::json pj;
    pj["class"] = agent_class_name(p.cls);
    pj["start"] = {p.start.x, p.start.y};
    auto& wps = pj["waypoints"] = nlohmann::json::array();
    for (const auto& w : p.waypoints) wps.push_back({w.x, w.y});
    peds.push_back(pj);
  }
  j["seed"] = sc.seed;
  return j;
}

inline Scenario scenario_from_json(const nlohmann::json& j) {
  try {
    if (!j.contains("version") || j.at("version").get<int>() != kScenarioVersion) {
      throw ScenarioError("scenario: missing or unsupported version field");
    }
    Scenario sc;
    sc.name = j.value("name", std::string{});
    const auto& b = j.at("map").at("bounds");
    sc.map.bounds = {b.at(0), b.at(1), b.at(2), b.at(3)};
    for (const auto& w : j.at("map").value("walls", nlohmann::json::array())) {
      sc.map.walls.push_back({{w.at(0), w.at(1)}, {w.at(2), w.at(3)}});
    }
    for (const auto& r : j.at("map").value("obstacles", nlohmann::json::array())) {
      sc.map.obstacles.push_back({r.at(0), r.at(1), r.at(2), r.at(3)});
    }
    const auto& rs = j.at("robot").at("start");
    sc.robot_start = {rs.at(0), rs.at(1)};
    sc.robot_heading = rs.size() > 2 ? rs.at(2).get<double>() : 0.0;
    const auto& rg = j.at("robot").at("goal");
    sc.robot_goal = {rg.at(0), rg.at(1)};
    for (const auto& pj : j.value("peds", nlohmann::json::array())) {
      PedestrianSpec p;
      p.cls = agent_class_from_name(pj.at("class").get<std::string>());
      p.start = {pj.at("start").at(0), pj.at("start").at(1)};
      for (const auto& w : pj.value("waypoints", nlohmann::json::array())) {
        p.waypoints.push_back({w.at(0), w.at(1)});
      }
      if (p.waypoints.empty()) p.waypoints.push_back(p.start);
      sc.peds.push_back(p);
    }
    sc.seed = j.value("seed", 0ULL);
    return sc;
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(std::string("scenario: malformed json: ") + e.what());
  }
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError("scenario " + path + ": " + e.what());
  }
  Scenario sc = scenario_from_json(j);
  if (sc.name.empty()) sc.name = path;
  return sc;
}

inline void save_scenario(const Scenario& sc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ScenarioError("cannot write scenario file: " + path);
  out << scenario_to_json(sc).dump(2) << "\n";
}

}  // namespace navsim
