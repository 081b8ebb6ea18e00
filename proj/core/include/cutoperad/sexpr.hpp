#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cutoperad {

/// Minimal S-expression reader shared by the term and Ass-Ass syntaxes.
/// An expression is an atom (symbol, integer, or double-quoted string) or a
/// parenthesized list.
struct Sexpr {
  bool isList = false;
  bool quoted = false;       // atom came from a "..." literal
  std::string atom;
  std::vector<Sexpr> items;
  std::size_t pos = 0;       // byte offset, for error reporting
};

Sexpr parseSexpr(std::string_view text);

}  // namespace cutoperad
