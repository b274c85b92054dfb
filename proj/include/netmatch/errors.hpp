#pragma once

#include <stdexcept>
#include <string>

namespace netmatch {

// Raised when an operation receives arguments outside its documented domain.
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

// Raised by exhaustive routines when the instance exceeds their size guard.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// Raised by the reference oracle when a supposedly guaranteed property fails.
class OracleViolation : public std::logic_error {
 public:
  explicit OracleViolation(const std::string& what) : std::logic_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace netmatch
