#pragma once

#include <string>

#include "cutoperad/subdivision.hpp"
#include "cutoperad/terms.hpp"

namespace cutoperad {

/// Signature file format:
///   {"d": int, "generators": [[{"name": str, "arity": int}, ...], ...]}
Signature signatureFromJson(const std::string& text);
std::string signatureToJson(const Signature& sig);

/// Subdivision format, nested:
///   {"cut": {"dir": k, "gen": name, "children": [...]}} | {"leaf": label}
std::string labelledToJson(const Signature& sig, const LabelledSubdivision& s);

/// Parse result is a raw construction tree plus the leaf labels in traversal
/// order; callers decide whether to canonicalize.
struct ParsedSubdivision {
  SubdivisionPtr raw;
  std::vector<int> numbers;
};
ParsedSubdivision labelledFromJson(const Signature& sig,
                                   const std::string& text);

/// JSON mirror of terms: {"gen": name, "args": [...]} with leaves
/// {"leaf": int} or {"leaf": "atom"}.
std::string termToJson(const Signature& sig, const TermPtr& t);
TermPtr termFromJson(const Signature& sig, const std::string& text);

}  // namespace cutoperad
