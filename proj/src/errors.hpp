// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace cnoma {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configuration document could not be parsed. Carries a 1-based line
/// number when the offending line is known (0 otherwise).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg, int line = 0)
      : Error(annotate(msg, line)), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  static std::string annotate(const std::string& msg, int line) {
    if (line <= 0) return msg;
    return msg + " (line " + std::to_string(line) + ")";
  }
  int line_ = 0;
};

/// A parameter set violates one of its invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The estimation-error variance reaches or exceeds the channel variance on
/// some link, leaving no estimated-channel variance.
class InfeasibleErrorVariance : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Adaptive integration exhausted its refinement budget before meeting the
/// requested tolerance.
class ToleranceNotReached : public Error {
 public:
  using Error::Error;
};

/// Slope fitting was attempted on unusable points.
class DegenerateFit : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cnoma
