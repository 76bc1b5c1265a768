#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "advdrive/geometry.hpp"

namespace advdrive::sim {

enum class MapId { kEnv1, kEnv2, kStraight };

MapId parse_map_id(const std::string& name);  // throws ConfigError on unknown id
std::string map_id_name(MapId id);

struct Route {
  Polyline path;
  double half_width = 1.75;
  Vec2 goal;  // destination; an agent finishes inside goal_radius of it
};

struct SpawnSlot {
  Pose pose;
  int route = 0;
};

struct MapSpec {
  MapId id = MapId::kEnv1;
  std::vector<Polygon> drivable;
  std::vector<Polygon> obstacles;  // curbs and other static road objects
  std::vector<Route> routes;
  std::vector<SpawnSlot> spawns;

  bool on_drivable(const Vec2& p) const;
  // Number of road arms incident to the intersection, from angular
  // clustering of corridor endpoints far from the map center (4 for a
  // four-way crossing, 3 for a T, 2 for a plain corridor).
  int road_arms() const;
};

// Fixed, hard-coded geometry per map id; pure function of the id.
MapSpec build_map(MapId id);

// Debug dump, one record per line: kind,id,comma-separated values.
void write_map_dump(const MapSpec& map, std::ostream& out);

}  // namespace advdrive::sim
