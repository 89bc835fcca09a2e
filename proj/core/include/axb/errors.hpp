#pragma once

#include <stdexcept>
#include <string>

namespace axb {

/// Argument outside the mathematical domain of an operation (p < 1, x <= 0, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two functions or operators live on different discretizations.
class GridMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A dense eigensolve or tensor grid would exceed its configured size cap.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Invalid run configuration; carries the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// Lookup of an unknown registry entry (corpus id, operation name, suite).
class UnknownName : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace axb
