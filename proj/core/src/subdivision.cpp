#include "cutoperad/subdivision.hpp"

#include <algorithm>

namespace cutoperad {

const SubdivisionPtr& Subdivision::leaf() {
  static const SubdivisionPtr instance(new Subdivision());
  return instance;
}

SubdivisionPtr Subdivision::cut(const Signature& sig, int genId,
                                std::vector<SubdivisionPtr> children) {
  const GeneratorInfo& g = sig.gen(genId);
  if (static_cast<int>(children.size()) != g.arity)
    throw ArityError("cut '" + g.name + "' expects " +
                     std::to_string(g.arity) + " children, got " +
                     std::to_string(children.size()));
  auto* node = new Subdivision();
  node->genId_ = genId;
  node->direction_ = g.direction;
  node->arity_ = 0;
  for (const auto& c : children) {
    if (!c) throw StructuralError("null child in cut");
    node->arity_ += c->arity();
  }
  node->children_ = std::move(children);
  return SubdivisionPtr(node);
}

bool sameShape(const SubdivisionPtr& a, const SubdivisionPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->isLeaf() != b->isLeaf()) return false;
  if (a->isLeaf()) return true;
  if (a->generator() != b->generator()) return false;
  auto ca = a->children(), cb = b->children();
  for (size_t i = 0; i < ca.size(); ++i)
    if (!sameShape(ca[i], cb[i])) return false;
  return true;
}

static void serializeInto(const Signature& sig, const SubdivisionPtr& s,
                          std::string& out) {
  if (s->isLeaf()) {
    out += '*';
    return;
  }
  out += '(';
  out += sig.gen(s->generator()).name;
  for (const auto& c : s->children()) {
    out += ' ';
    serializeInto(sig, c, out);
  }
  out += ')';
}

std::string serializeShape(const Signature& sig, const SubdivisionPtr& s) {
  std::string out;
  serializeInto(sig, s, out);
  return out;
}

namespace {

struct ShapeParser {
  const Signature& sig;
  std::string_view text;
  size_t pos = 0;

  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  SubdivisionPtr parse() {
    skipWs();
    if (pos >= text.size()) throw ParseError("unexpected end of shape", pos);
    if (text[pos] == '*') {
      ++pos;
      return Subdivision::leaf();
    }
    if (text[pos] != '(') throw ParseError("expected '*' or '('", pos);
    ++pos;
    skipWs();
    size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != ')' &&
           !std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
    std::string name(text.substr(start, pos - start));
    int id = sig.idOf(name);
    std::vector<SubdivisionPtr> children;
    for (;;) {
      skipWs();
      if (pos >= text.size()) throw ParseError("unterminated shape", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      children.push_back(parse());
    }
    return Subdivision::cut(sig, id, std::move(children));
  }
};

}  // namespace

SubdivisionPtr parseShape(const Signature& sig, std::string_view text) {
  ShapeParser p{sig, text};
  SubdivisionPtr s = p.parse();
  p.skipWs();
  if (p.pos != text.size())
    throw ParseError("trailing input after shape", p.pos);
  return s;
}

void validateNumbering(const LabelledSubdivision& s) {
  if (!s.shape) throw StructuralError("labelled subdivision without shape");
  int n = s.shape->arity();
  if (static_cast<int>(s.numbering.size()) != n)
    throw StructuralError("numbering size differs from arity");
  std::vector<char> seen(n + 1, 0);
  for (int v : s.numbering) {
    if (v < 1 || v > n || seen[v])
      throw StructuralError("numbering is not a bijection onto {1..n}");
    seen[v] = 1;
  }
}

}  // namespace cutoperad
