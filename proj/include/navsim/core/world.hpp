#pragma once

#include <vector>

#include "navsim/core/agent.hpp"
#include "navsim/core/geometry.hpp"

namespace navsim {

struct MapGeometry {
  AARect bounds;                 // walkable area
  std::vector<Segment> walls;
  std::vector<AARect> obstacles;  // filled axis-aligned blocks

  // All solid boundaries as segments (walls plus obstacle edges).
  std::vector<Segment> solid_segments() const {
    std::vector<Segment> out = walls;
    for (const auto& r : obstacles) {
      auto e = r.edges();
      out.insert(out.end(), e.begin(), e.end());
    }
    return out;
  }

  bool inside_obstacle(const Vec2& p) const {
    for (const auto& r : obstacles) {
      if (r.contains(p)) return true;
    }
    return false;
  }
};

// Open rectangular map enclosed by four boundary walls.
inline MapGeometry make_open_map(double width, double height) {
  MapGeometry m;
  m.bounds = {0.0, 0.0, width, height};
  m.walls = {{{0.0, 0.0}, {width, 0.0}},
             {{width, 0.0}, {width, height}},
             {{width, height}, {0.0, height}},
             {{0.0, height}, {0.0, 0.0}}};
  return m;
}

// Self-contained simulation state; plain value, copy to snapshot.
struct World {
  MapGeometry map;
  std::vector<PedestrianState> pedestrians;
  RobotState robot;
  long step_count{0};
  double sim_time{0.0};   // s, always step_count * step_dt (no drift)
  double step_dt{0.1};    // s

  void advance_clock() {
    step_count += 1;
    sim_time = step_count * step_dt;
  }
};

}  // namespace navsim
