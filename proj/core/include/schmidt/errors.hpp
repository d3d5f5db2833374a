#pragma once

#include <stdexcept>
#include <string>

namespace schmidt {

// Raised when an argument violates a documented precondition (bad shape,
// non-monotone parts, illegal mark, ...). Messages use 1-based positions.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A sequence or matrix has the wrong size for the requested operation.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace schmidt
