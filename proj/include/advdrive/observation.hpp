#pragma once

#include <vector>

#include "advdrive/world.hpp"

namespace advdrive::env {

// Ego-centric occupancy grid, 84x84x3, 0.5 m/cell, heading up. The agent
// sits at a fixed anchor cell; everything in the rear half-plane is zero.
// Channels: 0 drivable area, 1 other vehicles, 2 own corridor + goal cue.
struct Observation {
  static constexpr int kSize = 84;
  static constexpr int kChannels = 3;
  static constexpr double kMetersPerCell = 0.5;
  static constexpr int kAnchorRow = 62;  // forward = decreasing row
  static constexpr int kAnchorCol = 42;

  std::vector<float> data;  // row-major, (row * kSize + col) * kChannels + ch

  Observation() : data(static_cast<size_t>(kSize) * kSize * kChannels, 0.0f) {}

  float& at(int row, int col, int ch) {
    return data[(static_cast<size_t>(row) * kSize + col) * kChannels + ch];
  }
  float at(int row, int col, int ch) const {
    return data[(static_cast<size_t>(row) * kSize + col) * kChannels + ch];
  }
};

Observation render_observation(const sim::WorldState& world, int agent_index);

}  // namespace advdrive::env
