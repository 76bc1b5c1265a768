#include "advdrive/world.hpp"

namespace advdrive::sim {

bool in_own_corridor(const MapSpec& map, const VehicleState& v) {
  const Route& route = map.routes[v.route];
  return route.path.project(v.pos).dist <= route.half_width;
}

void detect_events(WorldState& world) {
  const MapSpec& map = *world.map;
  auto& agents = world.agents;
  for (AgentState& a : agents) {
    a.events = AgentEvents{};
    if (!a.active) continue;
    a.dist_to_goal = (a.vehicle.pos - map.routes[a.vehicle.route].goal).norm();
  }
  for (size_t i = 0; i < agents.size(); ++i) {
    if (!agents[i].active) continue;
    const OrientedRect fp_i = agents[i].vehicle.footprint();
    for (size_t j = i + 1; j < agents.size(); ++j) {
      if (!agents[j].active) continue;
      if (rects_overlap(fp_i, agents[j].vehicle.footprint())) {
        agents[i].events.hit_vehicle = true;
        agents[j].events.hit_vehicle = true;
        if (agents[i].events.collided_with < 0) agents[i].events.collided_with = static_cast<int>(j);
        if (agents[j].events.collided_with < 0) agents[j].events.collided_with = static_cast<int>(i);
      }
    }
    const bool center_on_road = map.on_drivable(agents[i].vehicle.pos);
    bool hit_obstacle = false;
    for (const Polygon& obs : map.obstacles) {
      if (rect_intersects_polygon(fp_i, obs)) {
        hit_obstacle = true;
        break;
      }
    }
    agents[i].events.hit_object = hit_obstacle || !center_on_road;
    agents[i].events.offroad = center_on_road && !in_own_corridor(map, agents[i].vehicle);
  }
}

}  // namespace advdrive::sim
