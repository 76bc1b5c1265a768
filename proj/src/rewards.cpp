#include "advdrive/rewards.hpp"

namespace advdrive::env {

double reward_ac(const sim::WorldState& prev, const sim::WorldState& cur, int agent_index,
                 const RewardParams& params) {
  const sim::AgentState& before = prev.agents[agent_index];
  const sim::AgentState& now = cur.agents[agent_index];
  const double progress = before.dist_to_goal - now.dist_to_goal;
  const double beta =
      sim::in_own_corridor(*cur.map, now.vehicle) ? params.corridor_bonus : 0.0;
  return progress + now.vehicle.speed / 10.0 -
         params.collision_penalty * (static_cast<double>(now.events.hit_vehicle) +
                                     static_cast<double>(now.events.hit_object)) -
         params.offroad_penalty * static_cast<double>(now.events.offroad) + beta;
}

double reward_adv(const sim::WorldState& prev, const sim::WorldState& cur, int adversary_index,
                  int victim_index, const RewardParams& params) {
  const sim::AgentState& before = prev.agents[adversary_index];
  const sim::AgentState& now = cur.agents[adversary_index];
  const sim::AgentState& victim = cur.agents[victim_index];
  const double progress = before.dist_to_goal - now.dist_to_goal;
  const double beta =
      sim::in_own_corridor(*cur.map, now.vehicle) ? params.corridor_bonus : 0.0;
  return progress + now.vehicle.speed / 10.0 +
         params.adv_collision_bonus * (static_cast<double>(victim.events.hit_vehicle) +
                                       static_cast<double>(victim.events.hit_object)) +
         params.adv_offroad_bonus * static_cast<double>(victim.events.offroad) + beta;
}

}  // namespace advdrive::env
