#pragma once

#include <stdexcept>
#include <string>

namespace ostar {

// Raised when a job description is structurally invalid. `path` points into
// the offending document ("phi[0]", "wreath.action", ...).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

// A configured size bound (index budget, subgroup bound, element cap) would
// be exceeded. Never accompanied by a partial answer.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exact identity that must hold did not (non-integral dimension, failed
// character orthogonality, disagreeing deciders).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ostar
