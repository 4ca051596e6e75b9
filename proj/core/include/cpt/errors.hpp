#pragma once

#include <stdexcept>
#include <string>

namespace cpt {

// Thrown when an operation's mathematical precondition fails
// (dimension mismatch, division by zero, signature mismatch, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a requested construction exceeds the configured size cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an internal consistency re-check fails; indicates a bug,
// never a bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace cpt
