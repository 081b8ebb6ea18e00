#include "doctest.h"
#include "helpers.hpp"

#include "cutoperad/homology.hpp"

using namespace cutoperad;
using namespace cutoperad::testing;

TEST_SUITE_BEGIN("homology");

TEST_CASE("basis sizes at small arities") {
  Signature sig = sigBinary2d();
  ShapeEnumerator shapes(sig);

  CHECK(chainBasis(sig, 1, 0, shapes).size() == 1);
  CHECK(chainBasis(sig, 1, 1, shapes).empty());

  CHECK(chainBasis(sig, 2, 0, shapes).size() == 4);
  CHECK(chainBasis(sig, 2, 1, shapes).size() == 4);
  CHECK(chainBasis(sig, 2, 2, shapes).empty());

  // one black 2x2 grid, trivial cells, 4! numberings
  auto deg2 = chainBasis(sig, 4, 2, shapes);
  CHECK(deg2.size() == 24);
  for (const auto& e : deg2) {
    validateChainElement(sig, e);
    CHECK(e.cells.size() == 4);
    for (const auto& c : e.cells) CHECK(c->isLeaf());
  }

  CHECK(chainBasis(sig, 3, 0, shapes).size() == 48);
  CHECK(chainBasis(sig, 3, 1, shapes).size() == 48);
  CHECK(chainBasis(sig, 4, 0, shapes).size() == 936);
  CHECK(chainBasis(sig, 4, 1, shapes).size() == 960);

  CHECK_THROWS_AS(chainBasis(sig, 5, 0, shapes, 100), BudgetError);
}

static ChainBasisElement degreeOneBlackH(const Signature& sig) {
  ChainBasisElement e;
  e.black = {BlackEntry{1, sig.idOf("h")}};
  e.cells = {Subdivision::leaf(), Subdivision::leaf()};
  e.numbering = {1, 2};
  return e;
}

TEST_CASE("differential whitens the black system") {
  Signature sig = sigBinary2d();
  ChainBasisElement black = degreeOneBlackH(sig);
  ChainVector d = differential(sig, black);
  REQUIRE(d.size() == 1);
  CHECK(d[0].coeff == 1);
  CHECK(d[0].elem.degree() == 0);
  REQUIRE(d[0].elem.cells.size() == 1);
  CHECK(!d[0].elem.cells[0]->isLeaf());
  CHECK(d[0].elem.cells[0]->direction() == 1);
  CHECK(d[0].elem.numbering == std::vector<int>{1, 2});

  // degree-0 elements map to zero
  CHECK(differential(sig, d[0].elem).empty());
}

TEST_CASE("cut-through data") {
  Signature sig = sigBinary2d();
  // the degree-0 white h-bisection
  ChainBasisElement white;
  white.cells = {Subdivision::cut(
      sig, sig.idOf("h"), {Subdivision::leaf(), Subdivision::leaf()})};
  white.numbering = {1, 2};
  auto data = cutThroughData(sig, white);
  REQUIRE(data.size() == 1);
  CHECK(data[0] == std::pair<int, int>{1, sig.idOf("h")});

  // fully black element with trivial cells
  ChainBasisElement full;
  full.black = {BlackEntry{1, sig.idOf("h")}, BlackEntry{2, sig.idOf("v")}};
  full.cells = {Subdivision::leaf(), Subdivision::leaf(), Subdivision::leaf(),
                Subdivision::leaf()};
  full.numbering = {1, 2, 3, 4};
  CHECK(cutThroughData(sig, full).empty());

  // the arity-mixing example: only the a-system is admissible
  Signature sig1(1, {{{"a", 2}, {"b", 3}}});
  auto bcut = [&] {
    return Subdivision::cut(sig1, sig1.idOf("b"),
                            {Subdivision::leaf(), Subdivision::leaf(),
                             Subdivision::leaf()});
  };
  ChainBasisElement mixed;
  mixed.cells = {Subdivision::cut(sig1, sig1.idOf("a"), {bcut(), bcut()})};
  mixed.numbering = {1, 2, 3, 4, 5, 6};
  auto mixedData = cutThroughData(sig1, mixed);
  REQUIRE(mixedData.size() == 1);
  CHECK(mixedData[0] == std::pair<int, int>{1, sig1.idOf("a")});
}

TEST_CASE("homotopy blackens cut-through systems") {
  Signature sig = sigBinary2d();
  ChainBasisElement white;
  white.cells = {Subdivision::cut(
      sig, sig.idOf("h"), {Subdivision::leaf(), Subdivision::leaf()})};
  white.numbering = {1, 2};
  ChainVector h = homotopy(sig, white);
  REQUIRE(h.size() == 1);
  CHECK(h[0].coeff == 1);
  CHECK(chainKey(sig, h[0].elem) == chainKey(sig, degreeOneBlackH(sig)));

  ChainBasisElement full;
  full.black = {BlackEntry{1, sig.idOf("h")}, BlackEntry{2, sig.idOf("v")}};
  full.cells = {Subdivision::leaf(), Subdivision::leaf(), Subdivision::leaf(),
                Subdivision::leaf()};
  full.numbering = {1, 2, 3, 4};
  CHECK(homotopy(sig, full).empty());
}

TEST_CASE("d squared vanishes and dh+hd is the grading operator") {
  for (const Signature& sig : {sigBinary2d(), sigMixed2d()}) {
    ShapeEnumerator shapes(sig);
    for (int n = 1; n <= 4; ++n) {
      for (int degree = 0; degree <= sig.dims(); ++degree) {
        for (const auto& e : chainBasis(sig, n, degree, shapes)) {
          ChainVector d1 = differential(sig, e);
          CHECK(applyDifferential(sig, d1).empty());

          auto data = cutThroughData(sig, e);
          int p = e.degree() + static_cast<int>(data.size());
          ChainVector lhs = addChains(sig, applyDifferential(sig, homotopy(sig, e)),
                                      applyHomotopy(sig, d1));
          ChainVector expected;
          if (p != 0)
            expected.push_back(ChainTerm{Rat(p), e});
          CHECK(chainsEqual(sig, lhs, expected));

          // the subcomplexes with fixed n_b + n_w are closed under d and h
          for (const auto& t : d1) {
            int q = t.elem.degree() +
                    static_cast<int>(cutThroughData(sig, t.elem).size());
            CHECK(q == p);
          }
          for (const auto& t : homotopy(sig, e)) {
            int q = t.elem.degree() +
                    static_cast<int>(cutThroughData(sig, t.elem).size());
            CHECK(q == p);
          }
        }
      }
    }
  }
}

TEST_CASE("homology is the unit collection") {
  Signature sig = sigBinary2d();
  ShapeEnumerator shapes(sig);

  ResolutionReport r1 = homologyRanks(sig, 1, shapes);
  CHECK(r1.pass);
  CHECK(r1.rows[0].homology == 1);

  ResolutionReport r2 = homologyRanks(sig, 2, shapes);
  CHECK(r2.pass);
  CHECK(r2.rows[0].dim == 4);
  CHECK(r2.rows[1].dim == 4);
  CHECK(r2.rows[1].rankD == 4);

  ResolutionReport r4 = homologyRanks(sig, 4, shapes);
  CHECK(r4.pass);
  CHECK(r4.minimal);
  // alternating sum of dimensions vanishes for n >= 2
  long alt = 0;
  for (const auto& row : r4.rows)
    alt += (row.degree % 2 == 0 ? 1 : -1) * static_cast<long>(row.dim);
  CHECK(alt == 0);
  CHECK(r4.rows[0].dim == 936);
  CHECK(r4.rows[1].dim == 960);
  CHECK(r4.rows[2].dim == 24);
}

TEST_SUITE_END();
