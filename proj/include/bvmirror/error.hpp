#pragma once

#include <stdexcept>
#include <string>

namespace bvmirror {

/// Malformed or invalid user input (bad literal, invalid configuration, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by a library caller.
class DomainError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A fiber valuation >= 6; the Weierstrass model must be minimalized first.
class NonMinimalFiber : public DomainError {
 public:
  explicit NonMinimalFiber(int valuation)
      : DomainError("non-minimal fiber (valuation " + std::to_string(valuation) +
                    " >= 6); minimalize the model first"),
        valuation_(valuation) {}

  int valuation() const noexcept { return valuation_; }

 private:
  int valuation_;
};

/// An internal consistency check failed. Never expected in a correct build.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bvmirror
