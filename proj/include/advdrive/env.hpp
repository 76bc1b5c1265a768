#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "advdrive/observation.hpp"
#include "advdrive/rewards.hpp"
#include "advdrive/scripted.hpp"
#include "advdrive/world.hpp"

namespace advdrive::env {

struct RosterEntry {
  std::string id;                       // unique; "<policy>.<slot>" by convention
  sim::AgentRole role = sim::AgentRole::kAutonomous;
  int spawn_slot = -1;                  // -1: assigned by roster order
  int route = -1;                       // -1: taken from the spawn slot
  std::string victim_id;                // adversaries only
};

struct EpisodeConfig {
  sim::MapId map = sim::MapId::kEnv1;
  std::vector<RosterEntry> roster;
  long max_steps = 2000;
  std::uint64_t seed = 0;
  double dt = 0.1;
  double goal_radius = 2.0;
  RewardParams reward;
  sim::ScriptedParams scripted;
};

struct StepInfo {
  bool hit_vehicle = false;
  bool hit_object = false;
  bool offroad = false;
  double dist_to_goal = 0.0;
  double speed = 0.0;
  std::string collided_with;  // empty if none
};

struct StepResult {
  Observation observation;
  double reward = 0.0;
  bool done = false;
  StepInfo info;
};

// One POSG episode over a fixed roster. All vehicles advance simultaneously;
// scripted agents act via scripted_traffic_policy. Agents despawn once done
// (goal reached, crash, or step limit).
class Environment {
 public:
  explicit Environment(EpisodeConfig config);

  // Places vehicles on their spawn slots and returns the initial
  // observation per roster entry. Throws ConfigError when the roster does
  // not fit the map's spawn slots.
  std::vector<Observation> reset();

  // Joint transition. `actions` must hold exactly one entry per live
  // non-scripted agent, keyed by agent id; anything else is a ProtocolError.
  // Results are indexed by roster position.
  std::vector<StepResult> step(const std::map<std::string, sim::ControlCommand>& actions);

  const sim::WorldState& world() const { return world_; }
  const EpisodeConfig& config() const { return config_; }
  bool agent_active(int index) const { return world_.agents[index].active; }
  int agent_index(const std::string& id) const;  // -1 if unknown
  long step_count() const { return world_.step; }
  bool episode_over() const;

  // Optional per-step CSV sink (one line per agent per step).
  void attach_logger(std::ostream* out, long episode_id);
  static const char* log_header();

 private:
  EpisodeConfig config_;
  sim::WorldState world_;
  std::vector<int> victim_index_;  // per roster entry, -1 when n/a
  std::ostream* log_ = nullptr;
  long episode_id_ = 0;
  bool reset_done_ = false;

  void write_log_line(int agent_index, double reward);
};

}  // namespace advdrive::env
