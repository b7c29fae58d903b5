#pragma once

#include <stdexcept>
#include <string>

namespace khcube {

/// Malformed or inconsistent input (bad PD text, invalid diagram, bad JSON).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded; the message names the cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation was violated by the caller.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace khcube
