#include "advdrive/scripted.hpp"

#include <algorithm>
#include <cmath>

namespace advdrive::sim {

ControlCommand scripted_traffic_policy(const WorldState& world, int agent_index,
                                       const ScriptedParams& params) {
  const AgentState& me = world.agents[agent_index];
  const VehicleState& v = me.vehicle;
  const Route& route = world.route_of(me);
  const auto my_proj = route.path.project(v.pos);

  // Steering: pure pursuit toward a point ahead on the route.
  const double lookahead = params.lookahead_base + params.lookahead_gain * v.speed;
  const Vec2 target = route.path.point_at(my_proj.s + lookahead);
  const Vec2 to_target = target - v.pos;
  const double alpha = wrap_angle(std::atan2(to_target.y, to_target.x) - v.heading);
  const double dist = std::max(to_target.norm(), 1e-6);
  const double curvature = 2.0 * std::sin(alpha) / dist;
  const MotionParams mp;
  double steer = std::atan(curvature * mp.wheelbase) / mp.max_steer_rad;
  steer = std::clamp(steer, -1.0, 1.0);

  // Brake for traffic ahead in the corridor.
  bool blocked = false;
  for (size_t j = 0; j < world.agents.size(); ++j) {
    if (static_cast<int>(j) == agent_index || !world.agents[j].active) continue;
    const VehicleState& other = world.agents[j].vehicle;
    const auto proj = route.path.project(other.pos);
    if (proj.dist > route.half_width + other.half_wid) continue;
    const double gap = (proj.s - my_proj.s) - (v.half_len + other.half_len);
    if (proj.s > my_proj.s && gap < params.follow_gap) {
      blocked = true;
      break;
    }
  }

  // Stop at the goal: brake when within stopping distance of it.
  const double arc_to_goal = route.path.project(route.goal).s - my_proj.s;
  const double stop_margin = v.speed * v.speed / (2.0 * mp.brake_decel) + 1.0;
  const bool arriving = arc_to_goal < stop_margin;

  if (blocked || arriving) return {steer, 0.0, 1.0};
  const double throttle = std::clamp(params.throttle_gain * (params.target_speed - v.speed), 0.0, 1.0);
  return {steer, throttle, 0.0};
}

}  // namespace advdrive::sim
