#pragma once

#include <algorithm>
#include <cmath>

#include "advdrive/geometry.hpp"

namespace advdrive::sim {

enum class AgentRole { kAutonomous, kAdversary, kScripted };

inline const char* role_name(AgentRole r) {
  switch (r) {
    case AgentRole::kAutonomous: return "ac";
    case AgentRole::kAdversary: return "adversary";
    case AgentRole::kScripted: return "scripted";
  }
  return "?";
}

struct ControlCommand {
  double steer = 0.0;     // [-1, 1]
  double throttle = 0.0;  // [0, 1]
  double brake = 0.0;     // [0, 1]

  ControlCommand clamped() const {
    return {std::clamp(steer, -1.0, 1.0), std::clamp(throttle, 0.0, 1.0),
            std::clamp(brake, 0.0, 1.0)};
  }
};

struct MotionParams {
  double throttle_accel = 4.0;                 // m/s^2
  double brake_decel = 8.0;                    // m/s^2
  double drag = 0.1;                           // 1/s
  double wheelbase = 2.5;                      // m
  double max_steer_rad = 35.0 * M_PI / 180.0;  // full-lock front wheel angle
  double max_speed = 20.0;                     // m/s, reverse disabled
};

struct VehicleState {
  Vec2 pos;
  double heading = 0.0;
  double speed = 0.0;  // forward, >= 0
  double half_len = 2.25;
  double half_wid = 0.9;
  int route = 0;
  AgentRole role = AgentRole::kScripted;

  OrientedRect footprint() const { return {pos, heading, half_len, half_wid}; }
};

// Kinematic bicycle update. Inputs are clamped; speed stays in
// [0, max_speed], heading rate uses the pre-step speed.
inline VehicleState step_vehicle(const VehicleState& v, const ControlCommand& control, double dt,
                                 const MotionParams& mp = {}) {
  const ControlCommand c = control.clamped();
  VehicleState out = v;
  const double accel = mp.throttle_accel * c.throttle - mp.brake_decel * c.brake - mp.drag * v.speed;
  out.speed = std::clamp(v.speed + accel * dt, 0.0, mp.max_speed);
  out.heading = wrap_angle(v.heading + (v.speed / mp.wheelbase) * std::tan(c.steer * mp.max_steer_rad) * dt);
  out.pos = v.pos + heading_vec(out.heading) * (out.speed * dt);
  return out;
}

}  // namespace advdrive::sim
