#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vfc {

using AgentId = int;
using ArmId = int;
// Rounds are 1-based: tau in [1, horizon].
using Round = std::int64_t;

// Joint action over all agents; kInactive marks an agent that sat the round out.
inline constexpr ArmId kInactive = -1;
using JointAction = std::vector<ArmId>;

// Raised for malformed or out-of-contract configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a caller violates the game protocol (e.g. plays outside its candidate set).
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a value that must have been validated upstream is out of range.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a persisted trace cannot be parsed; the message names the file.
class TraceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vfc
