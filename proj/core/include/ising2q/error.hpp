#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ising2q {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A physical parameter violates its domain (negative field, non-finite angle, ...).
class ParameterError : public Error {
 public:
  ParameterError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A numerical routine failed to meet its contract (non-convergence, lost positivity).
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A sweep specification or preset request is malformed.
class SpecError : public Error {
 public:
  SpecError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  /// JSON-pointer style location of the offending member, empty if not applicable.
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace ising2q
