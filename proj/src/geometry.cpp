#include "advdrive/geometry.hpp"

#include <algorithm>
#include <limits>

namespace advdrive::sim {

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * M_PI);
  if (a > M_PI) a -= 2.0 * M_PI;
  if (a <= -M_PI) a += 2.0 * M_PI;
  return a;
}

std::vector<Vec2> OrientedRect::corners() const {
  const Vec2 fwd = heading_vec(heading);
  const Vec2 right{fwd.y, -fwd.x};
  const Vec2 f = fwd * half_len;
  const Vec2 r = right * half_wid;
  return {center + f + r, center + f - r, center - f - r, center - f + r};
}

bool OrientedRect::contains(const Vec2& p) const {
  const Vec2 d = p - center;
  const Vec2 fwd = heading_vec(heading);
  const Vec2 right{fwd.y, -fwd.x};
  return std::abs(d.dot(fwd)) <= half_len && std::abs(d.dot(right)) <= half_wid;
}

namespace {

// Projects both rectangles onto `axis` and returns overlap extent
// (positive = overlapping on this axis).
double axis_overlap(const OrientedRect& a, const OrientedRect& b, const Vec2& axis) {
  auto extent = [&axis](const OrientedRect& r, double& lo, double& hi) {
    lo = std::numeric_limits<double>::infinity();
    hi = -lo;
    for (const Vec2& c : r.corners()) {
      const double v = c.dot(axis);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  };
  double alo, ahi, blo, bhi;
  extent(a, alo, ahi);
  extent(b, blo, bhi);
  return std::min(ahi, bhi) - std::max(alo, blo);
}

}  // namespace

double rect_overlap_margin(const OrientedRect& a, const OrientedRect& b) {
  const Vec2 fa = heading_vec(a.heading);
  const Vec2 fb = heading_vec(b.heading);
  const Vec2 axes[4] = {fa, {fa.y, -fa.x}, fb, {fb.y, -fb.x}};
  double margin = std::numeric_limits<double>::infinity();
  for (const Vec2& axis : axes) margin = std::min(margin, axis_overlap(a, b, axis));
  return margin;
}

bool rects_overlap(const OrientedRect& a, const OrientedRect& b) {
  return rect_overlap_margin(a, b) >= 0.0;
}

bool Polygon::contains(const Vec2& p) const {
  bool inside = false;
  const size_t n = pts.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

namespace {

bool segments_intersect(const Vec2& p1, const Vec2& p2, const Vec2& q1, const Vec2& q2) {
  auto orient = [](const Vec2& a, const Vec2& b, const Vec2& c) {
    return (b - a).cross(c - a);
  };
  const double o1 = orient(p1, p2, q1);
  const double o2 = orient(p1, p2, q2);
  const double o3 = orient(q1, q2, p1);
  const double o4 = orient(q1, q2, p2);
  if (((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0))) return true;
  return false;  // collinear touching treated as non-intersecting
}

}  // namespace

bool rect_intersects_polygon(const OrientedRect& r, const Polygon& poly) {
  const auto rc = r.corners();
  for (const Vec2& v : poly.pts) {
    if (r.contains(v)) return true;
  }
  for (const Vec2& c : rc) {
    if (poly.contains(c)) return true;
  }
  const size_t n = poly.pts.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    for (size_t k = 0; k < 4; ++k) {
      if (segments_intersect(poly.pts[j], poly.pts[i], rc[k], rc[(k + 1) % 4])) return true;
    }
  }
  return false;
}

Polyline::Polyline(std::vector<Vec2> pts) : pts_(std::move(pts)) {
  cum_.resize(pts_.size(), 0.0);
  for (size_t i = 1; i < pts_.size(); ++i) {
    cum_[i] = cum_[i - 1] + (pts_[i] - pts_[i - 1]).norm();
  }
}

Vec2 Polyline::point_at(double s) const {
  if (pts_.empty()) return {};
  if (s <= 0.0) return pts_.front();
  if (s >= length()) return pts_.back();
  const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
  const size_t i = static_cast<size_t>(it - cum_.begin());
  const double seg = cum_[i] - cum_[i - 1];
  const double t = seg > 0.0 ? (s - cum_[i - 1]) / seg : 0.0;
  return pts_[i - 1] + (pts_[i] - pts_[i - 1]) * t;
}

double Polyline::heading_at(double s) const {
  if (pts_.size() < 2) return 0.0;
  size_t i = 1;
  if (s > 0.0) {
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), std::min(s, length() - 1e-9));
    i = std::min(static_cast<size_t>(it - cum_.begin()), pts_.size() - 1);
  }
  const Vec2 d = pts_[i] - pts_[i - 1];
  return std::atan2(d.y, d.x);
}

Polyline::Projection Polyline::project(const Vec2& p) const {
  Projection best{0.0, std::numeric_limits<double>::infinity()};
  if (pts_.size() == 1) return {0.0, (p - pts_[0]).norm()};
  for (size_t i = 1; i < pts_.size(); ++i) {
    const Vec2 a = pts_[i - 1];
    const Vec2 d = pts_[i] - a;
    const double len2 = d.dot(d);
    double t = len2 > 0.0 ? (p - a).dot(d) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const Vec2 q = a + d * t;
    const double dist = (p - q).norm();
    if (dist < best.dist) {
      best.dist = dist;
      best.s = cum_[i - 1] + std::sqrt(len2) * t;
    }
  }
  return best;
}

}  // namespace advdrive::sim
