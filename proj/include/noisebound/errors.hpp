#pragma once

#include <stdexcept>
#include <string>

namespace noisebound {

/// Thrown when an input violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation cannot produce a trustworthy result
/// (numerical instability, singular reference state, size caps).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InputError(message);
}

}  // namespace noisebound
