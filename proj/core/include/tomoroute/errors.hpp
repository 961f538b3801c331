#ifndef TOMOROUTE_ERRORS_HPP_
#define TOMOROUTE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace tomoroute {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad experiment configuration: missing keys, counts that do not fit the
// topology, out-of-range values.
struct ConfigError : Error {
  using Error::Error;
};

// Malformed input file; message carries the offending line number.
struct ParseError : Error {
  using Error::Error;
};

// No route between a requested pair of nodes.
struct RoutingError : Error {
  using Error::Error;
};

// A split action violates the block-simplex constraints.
struct ConstraintError : Error {
  using Error::Error;
};

// Topology mutation could not be applied (e.g. no removable link).
struct MutationError : Error {
  using Error::Error;
};

// Traffic matrix cannot be scaled (zero traffic).
struct ScalingError : Error {
  using Error::Error;
};

// Vector/matrix shape disagreement in the neural or optimizer code.
struct DimensionError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace tomoroute

#endif  // TOMOROUTE_ERRORS_HPP_
