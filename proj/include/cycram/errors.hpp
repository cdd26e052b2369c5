#pragma once

#include <stdexcept>
#include <string>

namespace cycram {

// invalid-argument errors use std::invalid_argument directly.

/// A theorem's hypothesis does not hold, so the constructive guarantee is unavailable.
class GuaranteeUnavailable : public std::runtime_error {
 public:
  GuaranteeUnavailable(std::string hypothesis, const std::string& what)
      : std::runtime_error(what), hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// A construction that is guaranteed to succeed did not. Indicates a bug or a
/// violated structural invariant; never a legitimate outcome.
class GuaranteeViolated : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input exceeds what an exact procedure is configured to handle.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An assumption declared by the caller was found false when it could be checked.
class AssumptionViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cycram
