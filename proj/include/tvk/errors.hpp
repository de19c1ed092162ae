#pragma once

#include <stdexcept>
#include <string>

namespace tvk {

// Bad user input: malformed spec, invalid permutation, out-of-range flag.
// The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closure or enumeration exceeded its configured cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical input too ill-conditioned for the requested tolerance.
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sequence handed to a limit procedure does not satisfy its Cauchy
// precondition; carries a human-readable diagnosis.
class DiagnosticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An invariant the library guarantees was observed broken. Seeing this
// means a bug in tvk itself, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tvk
