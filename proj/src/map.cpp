#include "advdrive/map.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "advdrive/error.hpp"

namespace advdrive::sim {

namespace {

constexpr double kRoadHalfWidth = 3.5;   // two 3.5 m lanes per road
constexpr double kLaneOffset = 1.75;     // lane center offset from road axis
constexpr double kLaneHalfWidth = 1.75;
constexpr double kArmLength = 100.0;
constexpr double kCurbThickness = 0.5;

Polygon rect_poly(double x0, double y0, double x1, double y1) {
  return Polygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
}

Route straight_route(Vec2 from, Vec2 to, Vec2 goal) {
  return Route{Polyline({from, to}), kLaneHalfWidth, goal};
}

MapSpec make_env1() {
  MapSpec m;
  m.id = MapId::kEnv1;
  m.drivable = {rect_poly(-kArmLength, -kRoadHalfWidth, kArmLength, kRoadHalfWidth),
                rect_poly(-kRoadHalfWidth, -kArmLength, kRoadHalfWidth, kArmLength)};
  const double c = kRoadHalfWidth;
  const double t = kCurbThickness;
  m.obstacles = {
      // east-west road edges, broken at the crossing
      rect_poly(-kArmLength, c, -c, c + t), rect_poly(c, c, kArmLength, c + t),
      rect_poly(-kArmLength, -c - t, -c, -c), rect_poly(c, -c - t, kArmLength, -c),
      // north-south road edges
      rect_poly(c, c, c + t, kArmLength), rect_poly(c, -kArmLength, c + t, -c),
      rect_poly(-c - t, c, -c, kArmLength), rect_poly(-c - t, -kArmLength, -c, -c)};
  m.routes = {
      straight_route({-kArmLength, -kLaneOffset}, {kArmLength, -kLaneOffset}, {60.0, -kLaneOffset}),
      straight_route({kArmLength, kLaneOffset}, {-kArmLength, kLaneOffset}, {-60.0, kLaneOffset}),
      straight_route({kLaneOffset, -kArmLength}, {kLaneOffset, kArmLength}, {kLaneOffset, 60.0}),
      straight_route({-kLaneOffset, kArmLength}, {-kLaneOffset, -kArmLength}, {-kLaneOffset, -60.0})};
  const double h = M_PI / 2.0;
  m.spawns = {{{{-25.0, -kLaneOffset}, 0.0}, 0},  {{{25.0, kLaneOffset}, M_PI}, 1},
              {{{kLaneOffset, -25.0}, h}, 2},     {{{-kLaneOffset, 25.0}, -h}, 3},
              {{{-40.0, -kLaneOffset}, 0.0}, 0},  {{{40.0, kLaneOffset}, M_PI}, 1},
              {{{kLaneOffset, -40.0}, h}, 2},     {{{-kLaneOffset, 40.0}, -h}, 3}};
  return m;
}

MapSpec make_env2() {
  MapSpec m;
  m.id = MapId::kEnv2;
  m.drivable = {rect_poly(-kArmLength, -kRoadHalfWidth, kArmLength, kRoadHalfWidth),
                rect_poly(-kRoadHalfWidth, -kArmLength, kRoadHalfWidth, kRoadHalfWidth)};
  const double c = kRoadHalfWidth;
  const double t = kCurbThickness;
  m.obstacles = {
      rect_poly(-kArmLength, c, kArmLength, c + t),  // unbroken top edge (no north arm)
      rect_poly(-kArmLength, -c - t, -c, -c), rect_poly(c, -c - t, kArmLength, -c),
      rect_poly(c, -kArmLength, c + t, -c), rect_poly(-c - t, -kArmLength, -c, -c)};
  m.routes = {
      straight_route({-kArmLength, -kLaneOffset}, {kArmLength, -kLaneOffset}, {60.0, -kLaneOffset}),
      straight_route({kArmLength, kLaneOffset}, {-kArmLength, kLaneOffset}, {-60.0, kLaneOffset}),
      // south arm, right turn to east
      Route{Polyline({{kLaneOffset, -kArmLength}, {kLaneOffset, -kLaneOffset}, {kArmLength, -kLaneOffset}}),
            kLaneHalfWidth,
            {60.0, -kLaneOffset}},
      // westbound, left turn into the south arm
      Route{Polyline({{kArmLength, kLaneOffset}, {-kLaneOffset, kLaneOffset}, {-kLaneOffset, -kArmLength}}),
            kLaneHalfWidth,
            {-kLaneOffset, -60.0}}};
  const double h = M_PI / 2.0;
  m.spawns = {{{{-25.0, -kLaneOffset}, 0.0}, 0},  {{{25.0, kLaneOffset}, M_PI}, 1},
              {{{kLaneOffset, -25.0}, h}, 2},     {{{32.0, kLaneOffset}, M_PI}, 3},
              {{{-40.0, -kLaneOffset}, 0.0}, 0},  {{{40.0, kLaneOffset}, M_PI}, 1},
              {{{kLaneOffset, -40.0}, h}, 2},     {{{48.0, kLaneOffset}, M_PI}, 3}};
  return m;
}

// Desk-scale corridor: a single straight road. Route 2 runs against route 0's
// lane and exists for adversarial setups that need a head-on geometry.
MapSpec make_straight() {
  MapSpec m;
  m.id = MapId::kStraight;
  const double half = 60.0;
  m.drivable = {rect_poly(-half, -kRoadHalfWidth, half, kRoadHalfWidth)};
  const double c = kRoadHalfWidth;
  const double t = kCurbThickness;
  m.obstacles = {rect_poly(-half, c, half, c + t), rect_poly(-half, -c - t, half, -c)};
  m.routes = {straight_route({-half, -kLaneOffset}, {half, -kLaneOffset}, {50.0, -kLaneOffset}),
              straight_route({half, kLaneOffset}, {-half, kLaneOffset}, {-50.0, kLaneOffset}),
              straight_route({half, -kLaneOffset}, {-half, -kLaneOffset}, {-50.0, -kLaneOffset})};
  m.spawns = {{{{-40.0, -kLaneOffset}, 0.0}, 0},
              {{{40.0, kLaneOffset}, M_PI}, 1},
              {{{30.0, -kLaneOffset}, M_PI}, 2},
              {{{-50.0, -kLaneOffset}, 0.0}, 0}};
  return m;
}

}  // namespace

MapId parse_map_id(const std::string& name) {
  if (name == "env_1") return MapId::kEnv1;
  if (name == "env_2") return MapId::kEnv2;
  if (name == "straight") return MapId::kStraight;
  throw ConfigError("unknown map id: " + name);
}

std::string map_id_name(MapId id) {
  switch (id) {
    case MapId::kEnv1: return "env_1";
    case MapId::kEnv2: return "env_2";
    case MapId::kStraight: return "straight";
  }
  return "?";
}

bool MapSpec::on_drivable(const Vec2& p) const {
  for (const Polygon& poly : drivable) {
    if (poly.contains(p)) return true;
  }
  return false;
}

int MapSpec::road_arms() const {
  std::set<int> sectors;
  auto add_endpoint = [&sectors](const Vec2& p) {
    if (p.norm() < 20.0) return;  // only endpoints well away from the junction
    const double ang = std::atan2(p.y, p.x);
    int sector = static_cast<int>(std::lround(ang / (M_PI / 4.0)));
    if (sector == -4) sector = 4;
    sectors.insert(sector);
  };
  for (const Route& r : routes) {
    add_endpoint(r.path.points().front());
    add_endpoint(r.path.points().back());
  }
  return static_cast<int>(sectors.size());
}

MapSpec build_map(MapId id) {
  switch (id) {
    case MapId::kEnv1: return make_env1();
    case MapId::kEnv2: return make_env2();
    case MapId::kStraight: return make_straight();
  }
  throw ConfigError("unknown map id");
}

namespace {

void write_coords(std::ostream& out, const std::vector<Vec2>& pts) {
  char buf[64];
  for (const Vec2& p : pts) {
    std::snprintf(buf, sizeof(buf), ",%.6g,%.6g", p.x, p.y);
    out << buf;
  }
}

}  // namespace

void write_map_dump(const MapSpec& map, std::ostream& out) {
  char buf[96];
  for (size_t i = 0; i < map.drivable.size(); ++i) {
    out << "drivable," << i;
    write_coords(out, map.drivable[i].pts);
    out << "\n";
  }
  for (size_t i = 0; i < map.obstacles.size(); ++i) {
    out << "obstacle," << i;
    write_coords(out, map.obstacles[i].pts);
    out << "\n";
  }
  for (size_t i = 0; i < map.routes.size(); ++i) {
    out << "corridor," << i;
    write_coords(out, map.routes[i].path.points());
    out << "\n";
    std::snprintf(buf, sizeof(buf), "halfwidth,%zu,%.6g\n", i, map.routes[i].half_width);
    out << buf;
    std::snprintf(buf, sizeof(buf), "goal,%zu,%.6g,%.6g\n", i, map.routes[i].goal.x,
                  map.routes[i].goal.y);
    out << buf;
  }
  for (size_t i = 0; i < map.spawns.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "spawn,%zu,%.6g,%.6g,%.6g,%d\n", i, map.spawns[i].pose.pos.x,
                  map.spawns[i].pose.pos.y, map.spawns[i].pose.heading, map.spawns[i].route);
    out << buf;
  }
}

}  // namespace advdrive::sim
