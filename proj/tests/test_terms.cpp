#include "doctest.h"
#include "helpers.hpp"

#include <set>

using namespace cutoperad;
using namespace cutoperad::testing;

TEST_SUITE_BEGIN("terms");

TEST_CASE("parse and print round trip") {
  Signature sig = sigBinary2d();
  for (const char* text :
       {"1", "(h 1 2)", "(h (v 1 2) (v 3 4))", "(v (h 2 1) 3)"}) {
    TermPtr t = parseTerm(sig, text);
    CHECK(printTerm(sig, t) == text);
  }
  CHECK(printTerm(sig, parseTerm(sig, "(h \"x\" \"y\")")) == "(h \"x\" \"y\")");
  CHECK_THROWS_AS(parseTerm(sig, "(h 1"), ParseError);
  CHECK_THROWS_AS(parseTerm(sig, "(boom 1 2)"), ParseError);
  CHECK_THROWS_AS(parseTerm(sig, "(h 1 2 3)"), ArityError);
}

TEST_CASE("single node evaluates to the generator") {
  Signature sig = sigBinary2d();
  CHECK(elementsEqual(evaluate(sig, parseTerm(sig, "(h 1 2)")),
                      generatorElement(sig, "h")));
  CHECK(elementsEqual(evaluate(sig, parseTerm(sig, "1")), identityElement()));
}

TEST_CASE("the interchange law holds in the quotient") {
  Signature sig = sigBinary2d();
  TermPtr lhs = parseTerm(sig, "(h (v 1 2) (v 3 4))");
  TermPtr rhs = parseTerm(sig, "(v (h 1 3) (h 2 4))");
  CHECK(equivalent(sig, lhs, rhs));
  CHECK(elementsEqual(evaluate(sig, lhs), evaluate(sig, rhs)));
}

TEST_CASE("no associativity in the free factors") {
  Signature sig = sigBinary2d();
  CHECK(!equivalent(sig, parseTerm(sig, "(h (h 1 2) 3)"),
                    parseTerm(sig, "(h 1 (h 2 3))")));
}

TEST_CASE("single-direction evaluation is injective (arity <= 7)") {
  Signature sig = sigBinary1d();
  ShapeEnumerator shapes(sig);
  // Catalan(n-1) distinct binary trees, all with distinct geometric forms
  std::vector<long> catalan = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 7; ++n) {
    auto list = shapes.shapes(n);
    CHECK(static_cast<long>(list.size()) == catalan[n - 1]);
    std::set<std::string> geoms;
    for (const auto& s : list)
      geoms.insert(serializeGeom(sig, realizeShape(sig, s)));
    CHECK(static_cast<long>(geoms.size()) == catalan[n - 1]);
  }
}

TEST_CASE("equivalence is invariant under interchange mutation") {
  Signature sig = sigBinary2d();
  Rng rng(31);
  auto feasible = feasibleArities(sig, 10);
  for (int trial = 0; trial < 200; ++trial) {
    int arity = 2 + static_cast<int>(rng() % 9);
    TermPtr t = randomNumberedTerm(sig, rng, arity, feasible);
    TermPtr mutated = mutateByInterchanges(sig, rng, t, 1 + rng() % 6);
    CHECK(equivalent(sig, t, mutated));
  }
}

TEST_CASE("canonical term section") {
  Signature sig = sigBinary2d();
  CHECK(printTerm(sig, canonicalTerm(sig, identityElement())) == "1");
  TermPtr grid = parseTerm(sig, "(v (h 1 3) (h 2 4))");
  CHECK(printTerm(sig, canonicalTerm(sig, evaluate(sig, grid))) ==
        "(h (v 1 2) (v 3 4))");

  Rng rng(37);
  auto feasible = feasibleArities(sig, 9);
  for (int trial = 0; trial < 400; ++trial) {
    int arity = 1 + static_cast<int>(rng() % 9);
    CutOperadElement e = randomElement(sig, rng, arity, feasible);
    CHECK(elementsEqual(evaluate(sig, canonicalTerm(sig, e)), e));
  }
}

TEST_CASE("normal form is idempotent on terms") {
  Signature sig = sigMixed2d();
  Rng rng(41);
  auto feasible = feasibleArities(sig, 8);
  for (int trial = 0; trial < 150; ++trial) {
    int arity = 1 + static_cast<int>(rng() % 8);
    if (!feasible[arity]) continue;
    TermPtr t = randomNumberedTerm(sig, rng, arity, feasible);
    TermPtr norm = canonicalTerm(sig, evaluate(sig, t));
    CHECK(printTerm(sig, canonicalTerm(sig, evaluate(sig, norm))) ==
          printTerm(sig, norm));
    CHECK(equivalent(sig, t, norm));
  }
}

TEST_CASE("free multiplication stacks boxes") {
  Signature sig = sigBinary2d();
  FreeAlgebraElement p = freeGenerator("x");
  FreeAlgebraElement q = freeGenerator("y");
  std::vector<FreeAlgebraElement> args = {p, q};
  FreeAlgebraElement prod = freeMult(sig, sig.idOf("h"), args);
  CHECK(!prod.shape->isLeaf());
  CHECK(prod.shape->direction() == 1);
  REQUIRE(prod.labels.size() == 2);
  CHECK(prod.labels[0] == "x");
  CHECK(prod.labels[1] == "y");

  std::vector<FreeAlgebraElement> same = {p, p};
  FreeAlgebraElement sq = freeMult(sig, sig.idOf("v"), same);
  CHECK(sq.labels == std::vector<std::string>{"x", "x"});

  CHECK_THROWS_AS(freeMult(sig, sig.idOf("h"), std::span(&p, 1)), ArityError);
}

TEST_CASE("free interchange identity on random elements") {
  Signature sig = sigBinary2d();
  int h = sig.idOf("h"), v = sig.idOf("v");
  Rng rng(43);
  const char* alphabet[] = {"x", "y", "z"};
  auto randomFree = [&](auto&& self, int depth) -> FreeAlgebraElement {
    if (depth == 0 || rng() % 3 == 0)
      return freeGenerator(alphabet[rng() % 3]);
    std::vector<FreeAlgebraElement> args = {self(self, depth - 1),
                                            self(self, depth - 1)};
    return freeMult(sig, rng() % 2 ? h : v, args);
  };
  for (int trial = 0; trial < 100; ++trial) {
    FreeAlgebraElement a = randomFree(randomFree, 2);
    FreeAlgebraElement b = randomFree(randomFree, 2);
    FreeAlgebraElement c = randomFree(randomFree, 2);
    FreeAlgebraElement d = randomFree(randomFree, 2);
    std::vector<FreeAlgebraElement> ab = {a, b}, cd = {c, d};
    std::vector<FreeAlgebraElement> rows = {freeMult(sig, v, ab),
                                            freeMult(sig, v, cd)};
    std::vector<FreeAlgebraElement> ac = {a, c}, bd = {b, d};
    std::vector<FreeAlgebraElement> cols = {freeMult(sig, h, ac),
                                            freeMult(sig, h, bd)};
    CHECK(freeEqual(freeMult(sig, h, rows), freeMult(sig, v, cols)));
  }
}

TEST_CASE("evaluate is a homomorphism onto composition") {
  Signature sig = sigBinary2d();
  Rng rng(47);
  auto feasible = feasibleArities(sig, 10);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 3);
    TermPtr outer = randomNumberedTerm(sig, rng, n, feasible);
    std::vector<TermPtr> inners;
    std::vector<CutOperadElement> innerElems;
    for (int i = 0; i < n; ++i) {
      inners.push_back(
          randomNumberedTerm(sig, rng, 1 + rng() % 3, feasible));
      innerElems.push_back(evaluate(sig, inners.back()));
    }
    // graft textually: relabel inner leaves into blocks, substitute at the
    // outer leaf carrying each number
    std::vector<int> offsets(n + 1, 0);
    for (int i = 1; i <= n; ++i)
      offsets[i] = offsets[i - 1] + termArity(inners[i - 1]);
    auto relabel = [&](auto&& self, const TermPtr& t, int off) -> TermPtr {
      if (t->isLeaf()) return numberLeaf(off + t->leafNumber);
      std::vector<TermPtr> cs;
      for (const auto& c : t->children) cs.push_back(self(self, c, off));
      return termNode(sig, t->genId, std::move(cs));
    };
    auto graft = [&](auto&& self, const TermPtr& t) -> TermPtr {
      if (t->isLeaf())
        return relabel(relabel, inners[t->leafNumber - 1],
                       offsets[t->leafNumber - 1]);
      std::vector<TermPtr> cs;
      for (const auto& c : t->children) cs.push_back(self(self, c));
      return termNode(sig, t->genId, std::move(cs));
    };
    CutOperadElement viaTerms = evaluate(sig, graft(graft, outer));
    CutOperadElement viaOperad = compose(sig, evaluate(sig, outer), innerElems);
    CHECK(elementsEqual(viaTerms, viaOperad));
  }
}

TEST_SUITE_END();
