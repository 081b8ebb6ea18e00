#include "cutoperad/terms.hpp"

#include <algorithm>
#include <functional>

#include "cutoperad/sexpr.hpp"

namespace cutoperad {

TermPtr numberLeaf(int number) {
  if (number < 1) throw StructuralError("leaf numbers are positive");
  auto* t = new Term();
  t->leafNumber = number;
  return TermPtr(t);
}

TermPtr atomLeaf(std::string atom) {
  if (atom.empty()) throw StructuralError("empty leaf atom");
  auto* t = new Term();
  t->atom = std::move(atom);
  return TermPtr(t);
}

TermPtr termNode(const Signature& sig, int genId,
                 std::vector<TermPtr> children) {
  const GeneratorInfo& g = sig.gen(genId);
  if (static_cast<int>(children.size()) != g.arity)
    throw ArityError("term node '" + g.name + "' expects " +
                     std::to_string(g.arity) + " children");
  for (const auto& c : children)
    if (!c) throw StructuralError("null term child");
  auto* t = new Term();
  t->genId = genId;
  t->children = std::move(children);
  return TermPtr(t);
}

int termArity(const TermPtr& t) {
  if (t->isLeaf()) return 1;
  int n = 0;
  for (const auto& c : t->children) n += termArity(c);
  return n;
}

namespace {

TermPtr fromSexpr(const Signature& sig, const Sexpr& e) {
  if (!e.isList) {
    if (e.quoted) return atomLeaf(e.atom);
    try {
      size_t used = 0;
      int v = std::stoi(e.atom, &used);
      if (used == e.atom.size()) return numberLeaf(v);
    } catch (const std::exception&) {
    }
    throw ParseError("leaf must be a positive integer or quoted atom, got '" +
                         e.atom + "'",
                     e.pos);
  }
  if (e.items.empty()) throw ParseError("empty term", e.pos);
  const Sexpr& head = e.items.front();
  if (head.isList || head.quoted)
    throw ParseError("expected generator name", head.pos);
  if (!sig.has(head.atom))
    throw ParseError("unknown generator '" + head.atom + "'", head.pos);
  int genId = sig.idOf(head.atom);
  std::vector<TermPtr> children;
  for (size_t i = 1; i < e.items.size(); ++i)
    children.push_back(fromSexpr(sig, e.items[i]));
  return termNode(sig, genId, std::move(children));
}

}  // namespace

TermPtr parseTerm(const Signature& sig, std::string_view text) {
  return fromSexpr(sig, parseSexpr(text));
}

static void printInto(const Signature& sig, const TermPtr& t,
                      std::string& out) {
  if (t->isLeaf()) {
    if (t->leafNumber > 0)
      out += std::to_string(t->leafNumber);
    else
      out += "\"" + t->atom + "\"";
    return;
  }
  out += '(';
  out += sig.gen(t->genId).name;
  for (const auto& c : t->children) {
    out += ' ';
    printInto(sig, c, out);
  }
  out += ')';
}

std::string printTerm(const Signature& sig, const TermPtr& t) {
  std::string out;
  printInto(sig, t, out);
  return out;
}

namespace {

// Splits a term into the underlying construction tree plus the leaf data in
// depth-first order.
void termShape(const Signature& sig, const TermPtr& t, SubdivisionPtr& shape,
               std::vector<int>& numbers, std::vector<std::string>& atoms) {
  if (t->isLeaf()) {
    shape = Subdivision::leaf();
    numbers.push_back(t->leafNumber);
    atoms.push_back(t->atom);
    return;
  }
  std::vector<SubdivisionPtr> cs;
  cs.reserve(t->children.size());
  for (const auto& c : t->children) {
    SubdivisionPtr cshape;
    termShape(sig, c, cshape, numbers, atoms);
    cs.push_back(std::move(cshape));
  }
  shape = Subdivision::cut(sig, t->genId, std::move(cs));
}

}  // namespace

CutOperadElement evaluate(const Signature& sig, const TermPtr& t) {
  SubdivisionPtr raw;
  std::vector<int> numbers;
  std::vector<std::string> atoms;
  termShape(sig, t, raw, numbers, atoms);
  for (size_t i = 0; i < numbers.size(); ++i)
    if (numbers[i] == 0)
      throw StructuralError("operadic evaluation of a term with atom leaves");
  LabelledSubdivision e = canonicalizeLabelled(sig, raw, numbers);
  validateNumbering(e);
  return e;
}

bool equivalent(const Signature& sig, const TermPtr& a, const TermPtr& b) {
  if (termArity(a) != termArity(b))
    throw ArityError("equivalent: terms have different arities");
  return geomEqual(toGeom(sig, evaluate(sig, a)), toGeom(sig, evaluate(sig, b)));
}

namespace {

TermPtr readCanonical(const Signature& sig, const SubdivisionPtr& s, int& pos,
                      const std::vector<int>& numbering) {
  if (s->isLeaf()) return numberLeaf(numbering[pos++]);
  std::vector<TermPtr> cs;
  cs.reserve(s->children().size());
  for (const auto& c : s->children())
    cs.push_back(readCanonical(sig, c, pos, numbering));
  return termNode(sig, s->generator(), std::move(cs));
}

}  // namespace

TermPtr canonicalTerm(const Signature& sig, const CutOperadElement& e) {
  validateNumbering(e);
  int pos = 0;
  return readCanonical(sig, e.shape, pos, e.numbering);
}

namespace {

// One transpose at the root of t, if it matches gamma(w; u,...,u) with u in
// another direction: becomes gamma(u; w,...,w) with the child grid
// transposed.
TermPtr transposeRoot(const Signature& sig, const TermPtr& t) {
  if (t->isLeaf()) return nullptr;
  const int w = t->genId;
  const int dirW = sig.gen(w).direction;
  int u = -1;
  for (const auto& c : t->children) {
    if (c->isLeaf()) return nullptr;
    if (u < 0)
      u = c->genId;
    else if (c->genId != u)
      return nullptr;
  }
  if (u < 0 || sig.gen(u).direction == dirW) return nullptr;
  const int m = static_cast<int>(t->children.size());
  const int mu = sig.gen(u).arity;
  std::vector<TermPtr> newChildren(mu);
  for (int j = 0; j < mu; ++j) {
    std::vector<TermPtr> row(m);
    for (int i = 0; i < m; ++i) row[i] = t->children[i]->children[j];
    newChildren[j] = termNode(sig, w, std::move(row));
  }
  return termNode(sig, u, std::move(newChildren));
}

void collectMoves(const Signature& sig, const TermPtr& t,
                  const std::function<TermPtr(TermPtr)>& rebuild,
                  std::vector<TermPtr>& out) {
  if (t->isLeaf()) return;
  if (TermPtr moved = transposeRoot(sig, t)) out.push_back(rebuild(moved));
  for (size_t i = 0; i < t->children.size(); ++i) {
    auto rebuildChild = [&, i](TermPtr replacement) {
      std::vector<TermPtr> cs = t->children;
      cs[i] = std::move(replacement);
      return rebuild(termNode(sig, t->genId, std::move(cs)));
    };
    collectMoves(sig, t->children[i], rebuildChild, out);
  }
}

}  // namespace

std::vector<TermPtr> interchangeMoves(const Signature& sig, const TermPtr& t) {
  std::vector<TermPtr> out;
  collectMoves(sig, t, [](TermPtr x) { return x; }, out);
  return out;
}

FreeAlgebraElement freeGenerator(std::string label) {
  return FreeAlgebraElement{Subdivision::leaf(), {std::move(label)}};
}

FreeAlgebraElement freeMult(const Signature& sig, int genId,
                            std::span<const FreeAlgebraElement> args) {
  int m = sig.gen(genId).arity;
  if (static_cast<int>(args.size()) != m)
    throw ArityError("freeMult: expected " + std::to_string(m) + " arguments");
  std::vector<SubdivisionPtr> shapes;
  std::vector<std::string> allLabels;
  std::vector<int> payload;
  for (const auto& a : args) {
    if (!a.shape || static_cast<int>(a.labels.size()) != a.shape->arity())
      throw StructuralError("free-algebra element with inconsistent labels");
    shapes.push_back(a.shape);
    for (const auto& l : a.labels) {
      payload.push_back(static_cast<int>(allLabels.size()) + 1);
      allLabels.push_back(l);
    }
  }
  SubdivisionPtr raw = Subdivision::cut(sig, genId, std::move(shapes));
  LabelledSubdivision c = canonicalizeLabelled(sig, raw, payload);
  FreeAlgebraElement out;
  out.shape = c.shape;
  out.labels.reserve(allLabels.size());
  for (int v : c.numbering) out.labels.push_back(allLabels[v - 1]);
  return out;
}

FreeAlgebraElement evaluateFree(const Signature& sig, const TermPtr& t) {
  SubdivisionPtr raw;
  std::vector<int> numbers;
  std::vector<std::string> atoms;
  termShape(sig, t, raw, numbers, atoms);
  std::vector<int> payload(numbers.size());
  for (size_t i = 0; i < numbers.size(); ++i) {
    if (atoms[i].empty())
      throw StructuralError("free-algebra evaluation of a numbered term");
    payload[i] = static_cast<int>(i) + 1;
  }
  LabelledSubdivision c = canonicalizeLabelled(sig, raw, payload);
  FreeAlgebraElement out;
  out.shape = c.shape;
  out.labels.reserve(atoms.size());
  for (int v : c.numbering) out.labels.push_back(atoms[v - 1]);
  return out;
}

bool freeEqual(const FreeAlgebraElement& a, const FreeAlgebraElement& b) {
  return a.labels == b.labels && sameShape(a.shape, b.shape);
}

}  // namespace cutoperad
