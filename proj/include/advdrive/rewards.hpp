#pragma once

#include "advdrive/world.hpp"

namespace advdrive::env {

struct RewardParams {
  double corridor_bonus = 0.5;        // beta, granted while centered on own corridor
  double collision_penalty = 100.0;   // per vehicle/object collision flag (AC)
  double offroad_penalty = 0.5;       // AC offroad weight
  double adv_collision_bonus = 5.0;   // adversary bonus per victim collision flag
  double adv_offroad_bonus = 0.05;    // adversary bonus for victim offroad
};

// Driving reward: progress + speed/10 - 100*(collisions) - 0.5*offroad + beta.
double reward_ac(const sim::WorldState& prev, const sim::WorldState& cur, int agent_index,
                 const RewardParams& params = {});

// Adversary reward: own progress/speed/corridor bonus plus the victim's
// failure flags weighted positively.
double reward_adv(const sim::WorldState& prev, const sim::WorldState& cur, int adversary_index,
                  int victim_index, const RewardParams& params = {});

}  // namespace advdrive::env
