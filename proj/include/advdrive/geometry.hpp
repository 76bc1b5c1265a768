#pragma once

#include <cmath>
#include <vector>

namespace advdrive::sim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
};

inline Vec2 heading_vec(double heading) { return {std::cos(heading), std::sin(heading)}; }

// Normalize to (-pi, pi].
double wrap_angle(double a);

struct Pose {
  Vec2 pos;
  double heading = 0.0;
};

// Rectangle with arbitrary orientation; half extents along/across heading.
struct OrientedRect {
  Vec2 center;
  double heading = 0.0;
  double half_len = 0.0;
  double half_wid = 0.0;

  std::vector<Vec2> corners() const;
  bool contains(const Vec2& p) const;
};

bool rects_overlap(const OrientedRect& a, const OrientedRect& b);

// Separation margin between two rectangles as seen by the separating-axis
// test: positive = penetration depth when overlapping, negative = gap when
// disjoint. Used by tests to discount knife-edge cases.
double rect_overlap_margin(const OrientedRect& a, const OrientedRect& b);

// Simple (non-self-intersecting) polygon, vertices in order.
struct Polygon {
  std::vector<Vec2> pts;

  bool contains(const Vec2& p) const;  // even-odd rule
};

bool rect_intersects_polygon(const OrientedRect& r, const Polygon& poly);

// Piecewise-linear path with precomputed arc lengths.
class Polyline {
 public:
  Polyline() = default;
  explicit Polyline(std::vector<Vec2> pts);

  const std::vector<Vec2>& points() const { return pts_; }
  double length() const { return cum_.empty() ? 0.0 : cum_.back(); }
  Vec2 point_at(double s) const;
  double heading_at(double s) const;

  struct Projection {
    double s = 0.0;     // arc position of the closest point
    double dist = 0.0;  // distance from query to the path
  };
  Projection project(const Vec2& p) const;

 private:
  std::vector<Vec2> pts_;
  std::vector<double> cum_;  // cumulative arc length per vertex
};

}  // namespace advdrive::sim
