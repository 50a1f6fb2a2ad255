#pragma once

#include <stdexcept>
#include <string>

namespace octa {

/// Malformed input: a non-permutation, an out-of-range label, a bad file.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A well-formed input that violates an operation's precondition
/// (disconnected graph, bridge passed to unhook, non-dominant map, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive search refused because the requested size is over budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A command line that parses but asks for something contradictory.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace octa
