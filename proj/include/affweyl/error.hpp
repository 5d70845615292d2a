#pragma once

#include <stdexcept>
#include <string>

namespace affweyl {

// Raised for malformed or out-of-contract input (bad type/rank, improper
// facet, unparsable element text, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when enumeration would exceed a configured size limit.
class LimitExceeded : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// An internal postcondition failed. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace affweyl
