#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "navsim/core/vec2.hpp"

namespace navsim {

struct Segment {
  Vec2 a;
  Vec2 b;
};

struct AARect {
  double xmin{0.0};
  double ymin{0.0};
  double xmax{0.0};
  double ymax{0.0};

  bool contains(const Vec2& p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }

  std::vector<Segment> edges() const {
    return {{{xmin, ymin}, {xmax, ymin}},
            {{xmax, ymin}, {xmax, ymax}},
            {{xmax, ymax}, {xmin, ymax}},
            {{xmin, ymax}, {xmin, ymin}}};
  }
};

// Closest point on segment to p.
inline Vec2 closest_point_on_segment(const Segment& s, const Vec2& p) {
  const Vec2 ab = s.b - s.a;
  const double len2 = ab.squared_norm();
  if (len2 == 0.0) return s.a;
  double t = (p - s.a).dot(ab) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return s.a + ab * t;
}

inline double distance_to_segment(const Segment& s, const Vec2& p) {
  return (p - closest_point_on_segment(s, p)).norm();
}

// Ray origin o, unit direction d. Returns parameter t >= 0 of the first hit.
inline std::optional<double> ray_segment_intersection(const Vec2& o, const Vec2& d,
                                                      const Segment& s) {
  const Vec2 v = s.b - s.a;
  const double denom = d.cross(v);
  if (std::abs(denom) < 1e-15) return std::nullopt;  // parallel
  const Vec2 w = s.a - o;
  const double t = w.cross(v) / denom;
  const double u = w.cross(d) / denom;
  if (t < 0.0 || u < 0.0 || u > 1.0) return std::nullopt;
  return t;
}

// First hit of the ray with the circle boundary; 0 if the origin is inside.
inline std::optional<double> ray_circle_intersection(const Vec2& o, const Vec2& d,
                                                     const Vec2& center, double radius) {
  const Vec2 oc = o - center;
  if (oc.squared_norm() < radius * radius) return 0.0;
  const double b = oc.dot(d);
  const double c = oc.squared_norm() - radius * radius;
  const double disc = b * b - c;
  if (disc < 0.0) return std::nullopt;
  const double sq = std::sqrt(disc);
  const double t1 = -b - sq;
  if (t1 >= 0.0) return t1;
  const double t2 = -b + sq;
  if (t2 >= 0.0) return t2;
  return std::nullopt;
}

inline std::optional<double> ray_rect_intersection(const Vec2& o, const Vec2& d,
                                                   const AARect& r) {
  if (r.contains(o)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : r.edges()) {
    if (auto t = ray_segment_intersection(o, d, e)) best = std::min(best, *t);
  }
  if (std::isinf(best)) return std::nullopt;
  return best;
}

}  // namespace navsim
