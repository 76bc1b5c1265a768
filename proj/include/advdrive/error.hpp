#pragma once

#include <stdexcept>
#include <string>

namespace advdrive {

// Bad configuration (unknown map id, roster too large, checkpoint/spec
// mismatch, unknown config key). CLI maps these to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Caller broke an API contract (action for a finished agent, out-of-range
// action index, shape mismatch). CLI maps these to exit code 2.
class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite values where finite ones are required (losses, gradients).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem / serialization failures.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace advdrive
