#pragma once

#include <stdexcept>
#include <string>

namespace roquette {

/// Thrown when an internal consistency check fails. Any instance of this
/// exception means a computed object disagrees with a structural identity
/// that must hold; it is never a user error.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error("invariant violated: " + what) {}
};

/// Operands that belong to different fields, groups or class lists.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation ran out of its configured size or precision budget.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void ensure(bool condition, const std::string& what) {
  if (!condition) throw InvariantViolation(what);
}

}  // namespace roquette
