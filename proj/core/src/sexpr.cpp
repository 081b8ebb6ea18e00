#include "cutoperad/sexpr.hpp"

#include <cctype>

#include "cutoperad/errors.hpp"

namespace cutoperad {

namespace {

struct Reader {
  std::string_view text;
  std::size_t pos = 0;

  void skipWs() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  Sexpr read() {
    skipWs();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    Sexpr e;
    e.pos = pos;
    char c = text[pos];
    if (c == '(') {
      ++pos;
      e.isList = true;
      for (;;) {
        skipWs();
        if (pos >= text.size()) throw ParseError("missing ')'", pos);
        if (text[pos] == ')') {
          ++pos;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (c == ')') throw ParseError("unexpected ')'", pos);
    if (c == '"') {
      ++pos;
      e.quoted = true;
      while (pos < text.size() && text[pos] != '"') e.atom += text[pos++];
      if (pos >= text.size()) throw ParseError("unterminated string", e.pos);
      ++pos;
      return e;
    }
    while (pos < text.size() && text[pos] != '(' && text[pos] != ')' &&
           text[pos] != '"' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      e.atom += text[pos++];
    return e;
  }
};

}  // namespace

Sexpr parseSexpr(std::string_view text) {
  Reader r{text};
  Sexpr e = r.read();
  r.skipWs();
  if (r.pos != text.size()) throw ParseError("trailing input", r.pos);
  return e;
}

}  // namespace cutoperad
