#include "doctest.h"
#include "helpers.hpp"

#include "cutoperad/io_json.hpp"
#include "cutoperad/svg_render.hpp"

using namespace cutoperad;
using namespace cutoperad::testing;

TEST_SUITE_BEGIN("io");

TEST_CASE("signature JSON round trip") {
  Signature sig = sigMixed2d();
  Signature back = signatureFromJson(signatureToJson(sig));
  CHECK(back.dims() == 2);
  CHECK(back.generatorCount() == 3);
  CHECK(back.gen(back.idOf("q")).arity == 3);
  CHECK(back.gen(back.idOf("r")).direction == 2);

  CHECK_THROWS_AS(signatureFromJson("{"), ParseError);
  CHECK_THROWS_AS(
      signatureFromJson(
          R"({"d":1,"generators":[[{"name":"u","arity":1}]]})"),
      StructuralError);
}

TEST_CASE("labelled subdivisions survive the JSON round trip") {
  for (const Signature& sig : {sigBinary2d(), sigMixed2d()}) {
    Rng rng(19);
    auto feasible = feasibleArities(sig, 8);
    for (int trial = 0; trial < 100; ++trial) {
      int arity = 1 + static_cast<int>(rng() % 8);
      if (!feasible[arity]) continue;
      CutOperadElement e = randomElement(sig, rng, arity, feasible);
      ParsedSubdivision p = labelledFromJson(sig, labelledToJson(sig, e));
      LabelledSubdivision back = canonicalizeLabelled(sig, p.raw, p.numbers);
      CHECK(elementsEqual(e, back));
      // already-canonical input parses to the same tree
      CHECK(sameShape(p.raw, e.shape));
    }
  }
}

TEST_CASE("term JSON mirror round trip") {
  Signature sig = sigBinary2d();
  Rng rng(23);
  auto feasible = feasibleArities(sig, 8);
  for (int trial = 0; trial < 100; ++trial) {
    int arity = 1 + static_cast<int>(rng() % 8);
    TermPtr t = randomNumberedTerm(sig, rng, arity, feasible);
    TermPtr back = termFromJson(sig, termToJson(sig, t));
    CHECK(printTerm(sig, back) == printTerm(sig, t));
  }
  TermPtr atoms = parseTerm(sig, "(h \"x\" \"y\")");
  CHECK(printTerm(sig, termFromJson(sig, termToJson(sig, atoms))) ==
        "(h \"x\" \"y\")");
}

TEST_CASE("svg rendering") {
  Signature sig = sigBinary2d();
  std::string leaf = renderSvg(sig, identityElement());
  CHECK(leaf.find("<svg") == 0);
  CHECK(leaf.find(">1</text>") != std::string::npos);
  CHECK(leaf.find("<line") != std::string::npos);  // legend samples

  CutOperadElement grid =
      evaluate(sig, parseTerm(sig, "(h (v 1 2) (v 3 4))"));
  std::string svg = renderSvg(sig, grid);
  for (const char* label : {">1<", ">2<", ">3<", ">4<"})
    CHECK(svg.find(label) != std::string::npos);
  // byte-identical across invocations
  CHECK(renderSvg(sig, grid) == svg);

  Signature sig1 = sigBinary1d();
  CHECK_THROWS_AS(renderSvg(sig1, identityElement()), StructuralError);
}

TEST_SUITE_END();
