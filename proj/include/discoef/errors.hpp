#pragma once

#include <stdexcept>
#include <string>

namespace discoef {

/// Operands disagree on dimension.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A construction invariant or operation precondition is violated
/// (zero generator, indefinite shape matrix, bad parameter, ...).
struct InvariantError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input is rank-deficient where a full-dimensional body is required.
struct RankError : InvariantError {
  using InvariantError::InvariantError;
};

/// A numerical solver gave up; the result is indeterminate, never a
/// silent wrong answer.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enclosing-ellipsoid iteration cap hit before the stopping rule.
struct MveeNotConverged : SolverError {
  MveeNotConverged(const std::string& what, double achieved_gap, long iters)
      : SolverError(what), gap(achieved_gap), iterations(iters) {}
  double gap;
  long iterations;
};

/// Malformed or unreadable instance/report document.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace discoef
