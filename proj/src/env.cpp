#include "advdrive/env.hpp"

#include <cstdio>

#include "advdrive/error.hpp"

namespace advdrive::env {

using sim::AgentRole;
using sim::AgentState;
using sim::ControlCommand;

Environment::Environment(EpisodeConfig config) : config_(std::move(config)) {
  if (config_.roster.empty()) throw ConfigError("episode roster is empty");
  if (config_.max_steps <= 0) throw ConfigError("max_steps must be positive");
}

int Environment::agent_index(const std::string& id) const {
  for (size_t i = 0; i < world_.agents.size(); ++i) {
    if (world_.agents[i].id == id) return static_cast<int>(i);
  }
  return -1;
}

std::vector<Observation> Environment::reset() {
  auto map = std::make_shared<sim::MapSpec>(sim::build_map(config_.map));
  world_ = sim::WorldState{};
  world_.map = map;
  world_.rng.seed(config_.seed);

  const auto& slots = map->spawns;
  for (size_t i = 0; i < config_.roster.size(); ++i) {
    const RosterEntry& entry = config_.roster[i];
    const int slot = entry.spawn_slot >= 0 ? entry.spawn_slot : static_cast<int>(i);
    if (slot >= static_cast<int>(slots.size())) {
      throw ConfigError("roster of " + std::to_string(config_.roster.size()) +
                        " agents does not fit " + std::to_string(slots.size()) + " spawn slots");
    }
    AgentState a;
    a.id = entry.id;
    a.vehicle.pos = slots[slot].pose.pos;
    a.vehicle.heading = slots[slot].pose.heading;
    a.vehicle.speed = 0.0;
    a.vehicle.route = entry.route >= 0 ? entry.route : slots[slot].route;
    a.vehicle.role = entry.role;
    world_.agents.push_back(std::move(a));
  }
  victim_index_.assign(config_.roster.size(), -1);
  for (size_t i = 0; i < config_.roster.size(); ++i) {
    if (config_.roster[i].role == AgentRole::kAdversary) {
      if (config_.roster[i].victim_id.empty()) {
        throw ConfigError("adversary " + config_.roster[i].id + " has no victim");
      }
      const int vi = agent_index(config_.roster[i].victim_id);
      if (vi < 0) throw ConfigError("unknown victim id: " + config_.roster[i].victim_id);
      victim_index_[i] = vi;
    }
  }
  sim::detect_events(world_);
  reset_done_ = true;

  std::vector<Observation> obs;
  obs.reserve(world_.agents.size());
  for (size_t i = 0; i < world_.agents.size(); ++i) {
    obs.push_back(render_observation(world_, static_cast<int>(i)));
  }
  return obs;
}

bool Environment::episode_over() const {
  if (world_.step >= config_.max_steps) return true;
  for (const AgentState& a : world_.agents) {
    if (a.active && a.vehicle.role != AgentRole::kScripted) return false;
  }
  return true;
}

std::vector<StepResult> Environment::step(const std::map<std::string, ControlCommand>& actions) {
  if (!reset_done_) throw ProtocolError("step() before reset()");
  const size_t n = world_.agents.size();

  // Validate the joint action: exactly the live non-scripted agents.
  size_t expected = 0;
  for (const AgentState& a : world_.agents) {
    if (a.active && a.vehicle.role != AgentRole::kScripted) ++expected;
  }
  if (actions.size() != expected) {
    throw ProtocolError("joint action has " + std::to_string(actions.size()) +
                        " entries, expected " + std::to_string(expected));
  }
  for (const auto& [id, cmd] : actions) {
    const int idx = agent_index(id);
    if (idx < 0) throw ProtocolError("action for unknown agent: " + id);
    const AgentState& a = world_.agents[idx];
    if (!a.active) throw ProtocolError("action for finished agent: " + id);
    if (a.vehicle.role == AgentRole::kScripted) {
      throw ProtocolError("action for scripted agent: " + id);
    }
  }

  const sim::WorldState prev = world_;

  // All vehicles advance simultaneously from the pre-step world.
  for (size_t i = 0; i < n; ++i) {
    AgentState& a = world_.agents[i];
    if (!a.active) continue;
    ControlCommand cmd;
    if (a.vehicle.role == AgentRole::kScripted) {
      cmd = sim::scripted_traffic_policy(prev, static_cast<int>(i), config_.scripted);
    } else {
      cmd = actions.at(a.id);
    }
    a.vehicle = sim::step_vehicle(prev.agents[i].vehicle, cmd, config_.dt);
  }
  ++world_.step;
  sim::detect_events(world_);

  std::vector<StepResult> results(n);
  const bool at_limit = world_.step >= config_.max_steps;
  for (size_t i = 0; i < n; ++i) {
    AgentState& a = world_.agents[i];
    StepResult& r = results[i];
    if (!a.active) continue;
    switch (a.vehicle.role) {
      case AgentRole::kAutonomous:
        r.reward = reward_ac(prev, world_, static_cast<int>(i), config_.reward);
        break;
      case AgentRole::kAdversary:
        r.reward = reward_adv(prev, world_, static_cast<int>(i), victim_index_[i], config_.reward);
        break;
      case AgentRole::kScripted:
        r.reward = 0.0;
        break;
    }
    r.info.hit_vehicle = a.events.hit_vehicle;
    r.info.hit_object = a.events.hit_object;
    r.info.offroad = a.events.offroad;
    r.info.dist_to_goal = a.dist_to_goal;
    r.info.speed = a.vehicle.speed;
    if (a.events.collided_with >= 0) r.info.collided_with = world_.agents[a.events.collided_with].id;

    const bool crashed = a.events.hit_vehicle || a.events.hit_object;
    const bool reached_goal = a.dist_to_goal <= config_.goal_radius;
    r.done = crashed || reached_goal || at_limit;
    r.observation = render_observation(world_, static_cast<int>(i));
    write_log_line(static_cast<int>(i), r.reward);
    if (r.done && a.vehicle.role != AgentRole::kScripted) a.active = false;
  }
  return results;
}

void Environment::attach_logger(std::ostream* out, long episode_id) {
  log_ = out;
  episode_id_ = episode_id;
  if (log_) *log_ << log_header() << "\n";
}

const char* Environment::log_header() {
  return "episode_id,t,agent_id,role,x,y,heading,f,d,cv,co,io,reward";
}

void Environment::write_log_line(int agent_index, double reward) {
  if (!log_) return;
  const AgentState& a = world_.agents[agent_index];
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%ld,%ld,%s,%s,%.6g,%.6g,%.6g,%.6g,%.6g,%d,%d,%d,%.6g\n",
                episode_id_, world_.step, a.id.c_str(), sim::role_name(a.vehicle.role),
                a.vehicle.pos.x, a.vehicle.pos.y, a.vehicle.heading, a.vehicle.speed,
                a.dist_to_goal, a.events.hit_vehicle ? 1 : 0, a.events.hit_object ? 1 : 0,
                a.events.offroad ? 1 : 0, reward);
  *log_ << buf;
}

}  // namespace advdrive::env
