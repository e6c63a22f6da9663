#pragma once

#include <stdexcept>
#include <string>

namespace coint {

// Input that violates an operation's preconditions (bad parameters, malformed
// files, inconsistent assignments).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An instance exceeds a configured size or work budget.
class LimitError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A contract between modules was broken; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace coint
