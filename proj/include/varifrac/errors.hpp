#pragma once

#include <stdexcept>
#include <string>

namespace varifrac {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateSimplex : Error {
  using Error::Error;
};

struct IdError : Error {
  using Error::Error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct MissingCurvature : Error {
  using Error::Error;
};

struct MeshError : Error {
  using Error::Error;
};

// Input/config parsing problem. `offset` is a byte offset into the input when
// known, -1 otherwise.
struct ParseError : Error {
  explicit ParseError(const std::string& msg, long byte_offset = -1)
      : Error(msg), offset(byte_offset) {}
  long offset = -1;
};

// Quasistatic step could not be completed (e.g. the elastic line search cannot
// keep det Du positive).
struct StepFailure : Error {
  explicit StepFailure(const std::string& msg, int step_index = -1)
      : Error(msg), step(step_index) {}
  int step = -1;
};

}  // namespace varifrac
