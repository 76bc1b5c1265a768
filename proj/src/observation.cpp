#include "advdrive/observation.hpp"

#include <algorithm>
#include <cmath>

namespace advdrive::env {

using sim::OrientedRect;
using sim::Route;
using sim::Vec2;

namespace {

constexpr double kGoalRadius = 2.0;

struct EgoFrame {
  Vec2 origin;
  Vec2 fwd;
  Vec2 right;

  Vec2 to_world(double forward, double lateral) const {
    return origin + fwd * forward + right * lateral;
  }
  // (forward, lateral) of a world point
  Vec2 to_ego(const Vec2& p) const {
    const Vec2 d = p - origin;
    return {d.dot(fwd), d.dot(right)};
  }
};

}  // namespace

Observation render_observation(const sim::WorldState& world, int agent_index) {
  Observation obs;
  const sim::AgentState& me = world.agents[agent_index];
  const sim::VehicleState& v = me.vehicle;
  const EgoFrame frame{v.pos, sim::heading_vec(v.heading),
                       {std::sin(v.heading), -std::cos(v.heading)}};
  const sim::MapSpec& map = *world.map;
  const Route& route = map.routes[v.route];
  const double my_goal_dist = (v.pos - route.goal).norm();

  // Channels 0 and 2, forward half-plane only (rows above the anchor).
  for (int r = 0; r <= Observation::kAnchorRow; ++r) {
    const double fwd = (Observation::kAnchorRow - r) * Observation::kMetersPerCell;
    for (int c = 0; c < Observation::kSize; ++c) {
      const double lat = (c - Observation::kAnchorCol) * Observation::kMetersPerCell;
      const Vec2 p = frame.to_world(fwd, lat);
      if (map.on_drivable(p)) obs.at(r, c, 0) = 1.0f;
      if (route.path.project(p).dist <= route.half_width) {
        const double cell_goal_dist = (p - route.goal).norm();
        float val = 0.5f;
        if (cell_goal_dist < my_goal_dist) val = 0.75f;
        if (cell_goal_dist <= kGoalRadius) val = 1.0f;
        obs.at(r, c, 2) = val;
      }
    }
  }

  // Channel 1: other vehicles, rasterized over their ego-frame bounding box.
  for (size_t j = 0; j < world.agents.size(); ++j) {
    if (static_cast<int>(j) == agent_index || !world.agents[j].active) continue;
    const OrientedRect fp = world.agents[j].vehicle.footprint();
    double min_f = 1e18, max_f = -1e18, min_l = 1e18, max_l = -1e18;
    for (const Vec2& corner : fp.corners()) {
      const Vec2 e = frame.to_ego(corner);
      min_f = std::min(min_f, e.x);
      max_f = std::max(max_f, e.x);
      min_l = std::min(min_l, e.y);
      max_l = std::max(max_l, e.y);
    }
    if (max_f < 0.0) continue;  // fully behind
    const double mpc = Observation::kMetersPerCell;
    const int r0 = std::max(0, Observation::kAnchorRow - static_cast<int>(std::ceil(max_f / mpc)));
    const int r1 = std::min(Observation::kAnchorRow,
                            Observation::kAnchorRow - static_cast<int>(std::floor(min_f / mpc)));
    const int c0 = std::max(0, Observation::kAnchorCol + static_cast<int>(std::floor(min_l / mpc)));
    const int c1 = std::min(Observation::kSize - 1,
                            Observation::kAnchorCol + static_cast<int>(std::ceil(max_l / mpc)));
    for (int r = r0; r <= r1; ++r) {
      const double fwd = (Observation::kAnchorRow - r) * mpc;
      for (int c = c0; c <= c1; ++c) {
        const double lat = (c - Observation::kAnchorCol) * mpc;
        if (fp.contains(frame.to_world(fwd, lat))) obs.at(r, c, 1) = 1.0f;
      }
    }
  }
  return obs;
}

}  // namespace advdrive::env
