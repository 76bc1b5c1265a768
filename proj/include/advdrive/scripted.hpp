#pragma once

#include "advdrive/world.hpp"

namespace advdrive::sim {

struct ScriptedParams {
  double target_speed = 6.0;      // m/s
  double follow_gap = 6.0;        // brake when bumper gap ahead drops below this
  double throttle_gain = 0.5;     // proportional speed control
  double lookahead_base = 4.0;    // pure-pursuit lookahead = base + gain * speed
  double lookahead_gain = 0.5;
};

// Pure-pursuit lane following along the agent's route. Deterministic in
// (world, agent). Brakes for traffic ahead in its corridor and to stop at
// the route goal.
ControlCommand scripted_traffic_policy(const WorldState& world, int agent_index,
                                       const ScriptedParams& params = {});

}  // namespace advdrive::sim
