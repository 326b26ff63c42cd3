#pragma once

#include <stdexcept>
#include <string>

namespace ncrotor {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: even or sub-3 N_c, non-positive inertia, malformed labels.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A band was requested that the Wess-Zumino-Witten constraint forbids,
/// or whose spin is not among the allowed spins at Y = N_c/3.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// Reference masses that are degenerate or inverted.
class CalibrationError : public Error {
 public:
  using Error::Error;
};

/// The profile relaxation exhausted its iteration budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The profile converged but the grid cannot resolve it (virial check).
class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ncrotor
