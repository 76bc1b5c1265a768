#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "advdrive/map.hpp"
#include "advdrive/vehicle.hpp"

namespace advdrive::sim {

struct AgentEvents {
  bool hit_vehicle = false;  // overlap with another vehicle this step
  bool hit_object = false;   // overlap with a static obstacle, or center off the drivable area
  bool offroad = false;      // center outside own lane corridor but still on drivable area
  int collided_with = -1;    // agent index of the vehicle hit, if any
};

struct AgentState {
  std::string id;
  VehicleState vehicle;
  AgentEvents events;
  double dist_to_goal = 0.0;
  bool active = true;   // despawned agents stop moving, colliding, being seen
  int victim = -1;      // adversaries: agent index whose failures they are rewarded for
};

struct WorldState {
  std::shared_ptr<const MapSpec> map;
  std::vector<AgentState> agents;
  long step = 0;
  std::mt19937_64 rng;  // seed-derived stream for any stochastic dynamics

  const Route& route_of(const AgentState& a) const { return map->routes[a.vehicle.route]; }
};

// Recomputes per-agent event flags and distance-to-goal from current poses.
// Vehicle-vehicle collision flags are symmetric by construction.
void detect_events(WorldState& world);

// True when the vehicle's footprint center lies within its route corridor.
bool in_own_corridor(const MapSpec& map, const VehicleState& v);

}  // namespace advdrive::sim
