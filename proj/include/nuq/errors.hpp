#pragma once

#include <stdexcept>
#include <string>

namespace nuq {

// Out-of-range indices, unsupported dimensions, malformed physical inputs.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Dense objects that would exceed the configured size cap.
class CapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Numerical integrity failures: non-Hermitian input, norm deficits,
// eigensolver failures, undefined mitigation.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A circuit builder produced something structurally invalid
// (connectivity violation, wire/dimension mismatch, no Clifford point).
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Invalid or incomplete run configuration. `field` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace nuq
