#pragma once

#include <stdexcept>
#include <string>

namespace distid {

/// Raised when an operation's input violates its documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by the decoder when every permutation has score -infinity.
class InfeasibleAssignment : public PreconditionError {
 public:
  explicit InfeasibleAssignment(const std::string& what) : PreconditionError(what) {}
};

/// Malformed or unknown configuration content.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Output could not be written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace distid
