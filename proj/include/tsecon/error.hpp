#pragma once

#include <stdexcept>
#include <string>

namespace tsecon {

/// Structurally invalid input: bad configuration, malformed argument,
/// inconsistent dimensions.  Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// A statistical precondition does not hold on otherwise well-formed data
/// (degenerate sample, non-positive value under a log, integration order
/// above one, ...).  Maps to CLI exit code 3.
class StatError : public std::runtime_error {
 public:
  explicit StatError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem or parse failure on external inputs and outputs.
/// Maps to CLI exit code 4.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tsecon
