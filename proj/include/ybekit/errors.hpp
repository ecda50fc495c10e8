#pragma once

#include <stdexcept>
#include <string>

namespace ybekit {

/// Operands have incompatible orders or block grids.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 1-based index or size argument is outside its valid range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An input does not satisfy the mathematical precondition of an operation
/// (e.g. a non-involutive solution passed where an involutive one is needed).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text input (CSV matrices, JSON solutions, fraction strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration exceeded the configured result cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ybekit
