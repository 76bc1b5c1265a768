#pragma once

#include <algorithm>
#include <array>

#include "advdrive/error.hpp"
#include "advdrive/vehicle.hpp"

namespace advdrive::env {

inline constexpr int kDiscreteActionCount = 9;

// Index = 3*s + m: s picks steer {-0.5, 0, +0.5}, m picks motion
// {(throttle 1), (coast), (brake 1)}.
inline sim::ControlCommand decode_discrete_action(int index) {
  if (index < 0 || index >= kDiscreteActionCount) {
    throw ProtocolError("discrete action index out of range: " + std::to_string(index));
  }
  static constexpr std::array<double, 3> kSteer{-0.5, 0.0, 0.5};
  static constexpr std::array<std::array<double, 2>, 3> kMotion{{{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}}};
  const int s = index / 3;
  const int m = index % 3;
  return {kSteer[s], kMotion[m][0], kMotion[m][1]};
}

// Two floats in [-1,1]: steer, and a combined throttle/brake axis.
inline sim::ControlCommand decode_continuous_action(double a0, double a1) {
  a0 = std::clamp(a0, -1.0, 1.0);
  a1 = std::clamp(a1, -1.0, 1.0);
  return {a0, std::max(a1, 0.0), std::max(-a1, 0.0)};
}

}  // namespace advdrive::env
