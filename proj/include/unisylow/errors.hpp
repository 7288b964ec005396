#pragma once

#include <stdexcept>
#include <string>

namespace unisylow {

/// Invalid parameters or violated preconditions supplied by the caller.
class invalid_parameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction or search would exceed the configured element budget.
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, unsigned long long required)
      : std::runtime_error(what + " (requires a budget of at least " +
                           std::to_string(required) + " elements)"),
        required_(required) {}

  unsigned long long required() const noexcept { return required_; }

 private:
  unsigned long long required_;
};

class singular_matrix : public std::domain_error {
 public:
  singular_matrix() : std::domain_error("matrix is singular") {}
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group cache exists but its header does not describe the requested group.
class cache_mismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Broken internal invariant; indicates a bug rather than bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace unisylow
