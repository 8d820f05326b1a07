#pragma once

#include <stdexcept>
#include <string>

namespace nlsup {

// Malformed file content or malformed in-memory structure.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible dimensions or grid geometries, or a point outside a grid.
struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A level schedule that would leave the coercivity-trusted range, or a
// sentinel (+inf) value encountered during evaluation.
struct UntrustedScheduleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pinned tolerance was exceeded.
struct ToleranceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An operation's input contract was violated.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Default comparison tolerance for point coordinates and set membership.
inline constexpr double kDefaultTol = 1e-9;

}  // namespace nlsup
