#pragma once

#include <stdexcept>
#include <string>

namespace blochdrive {

// Invalid argument values or violated preconditions.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Query outside the domain a profile is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical routine failed to reach its tolerance. `estimate` carries the
// best error estimate achieved.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

// The state does not satisfy a physical precondition of the operation
// (e.g. probability too close to the open ends of a chain).
class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Momentum distribution has no well-defined circular mean.
class UndefinedMomentumError : public StateError {
 public:
  using StateError::StateError;
};

// Evolution aborted because the packet reached the chain boundary.
class BoundaryContaminationError : public std::runtime_error {
 public:
  BoundaryContaminationError(const std::string& what, double time, double occupancy)
      : std::runtime_error(what), time_(time), occupancy_(occupancy) {}
  double time() const noexcept { return time_; }
  double occupancy() const noexcept { return occupancy_; }

 private:
  double time_;
  double occupancy_;
};

// Malformed or inconsistent scenario configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace blochdrive
