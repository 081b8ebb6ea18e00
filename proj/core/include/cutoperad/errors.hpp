#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cutoperad {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (S-expression or JSON); carries a byte offset.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Structurally invalid value: non-bijective numbering, geometry that is
/// not a subdivision, inconsistent arities in a container, ...
struct StructuralError : Error {
  using Error::Error;
};

/// Unknown generator / direction out of range.
struct LookupError : Error {
  using Error::Error;
};

/// Arity mismatch in a composition-like operation.
struct ArityError : Error {
  using Error::Error;
};

/// A configured resource cap was exceeded; distinct from failure.
struct BudgetError : Error {
  using Error::Error;
};

/// Two admissible root cuts were found in the same direction.  This is
/// believed impossible; if it ever fires the offending geometry is
/// attached so it can be reported, never silently resolved.
struct DuplicateAdmissibleRoots : Error {
  DuplicateAdmissibleRoots(const std::string& msg, std::string counterexample)
      : Error(msg + "\ncounterexample: " + counterexample),
        counterexample(std::move(counterexample)) {}
  std::string counterexample;
};

}  // namespace cutoperad
