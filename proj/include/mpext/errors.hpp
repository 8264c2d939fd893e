#pragma once

#include <stdexcept>
#include <string>

namespace mpext {

/// Operands of different dimension were combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                              std::to_string(rhs)) {}
};

/// A documented hypothesis of an operation does not hold for its arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree by construction disagreed. Signals a bug.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed external input (JSON documents, scalar literals).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mpext
