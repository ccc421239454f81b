#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace detta {

// Error taxonomy. The CLI maps these onto exit codes (see tools/detta_main.cpp).

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A filter was asked to move backwards in time.
class TimeRegression : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An update step with a negative time delta.
class DegenerateStep : public TimeRegression {
 public:
  using TimeRegression::TimeRegression;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnsupportedVersion : public DataError {
 public:
  using DataError::DataError;
};

/// A metric was requested over an empty sample set.
class UndefinedMetric : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace detta
