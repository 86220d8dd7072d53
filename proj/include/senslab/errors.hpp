#pragma once

#include <stdexcept>
#include <string>

namespace senslab {

/// Out-of-range argument (radius, shadow depth, family parameter, ...).
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Two operands live on cubes of different dimension.
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A size guard (n cap, enumeration budget) would be exceeded.
struct GuardExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed .tt / .ball / integer-function input.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Advice does not cover a point the algorithm needs, or contradicts its promise.
struct AdviceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require_same_dimension(unsigned a, unsigned b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                            " vs " + std::to_string(b) + ")");
  }
}

}  // namespace senslab
