#pragma once

#include <string>
#include <vector>

#include "cutoperad/enumeration.hpp"
#include "cutoperad/geometry.hpp"
#include "cutoperad/numeric.hpp"

namespace cutoperad {

struct BlackEntry {
  int direction = 0;  // 1-based; strictly increasing within a datum
  int genId = 0;
};

/// A basis element of the resolution complex at fixed arity: a black grid
/// (one simultaneous full-cut system per chosen direction, wedge-ordered by
/// increasing direction), a canonical white subdivision in every grid cell,
/// and a global numbering of all leaves.
///
/// Cells are stored linearly in lexicographic grid order with the first
/// black direction slowest; the global numbering lists cells in that order,
/// leaves in canonical order within each cell.
struct ChainBasisElement {
  std::vector<BlackEntry> black;
  std::vector<SubdivisionPtr> cells;
  std::vector<int> numbering;

  int degree() const { return static_cast<int>(black.size()); }
  int arity() const { return static_cast<int>(numbering.size()); }
};

std::string chainKey(const Signature& sig, const ChainBasisElement& e);
void validateChainElement(const Signature& sig, const ChainBasisElement& e);

struct ChainTerm {
  Rat coeff;
  ChainBasisElement elem;
};

/// A formal sum of basis elements; kept combined (unique keys, no zero
/// coefficients) and sorted by key.
using ChainVector = std::vector<ChainTerm>;

ChainVector combine(const Signature& sig, ChainVector terms);
ChainVector addChains(const Signature& sig, const ChainVector& a,
                      const ChainVector& b);
ChainVector scaleChain(const Rat& c, ChainVector v);
bool chainsEqual(const Signature& sig, const ChainVector& a,
                 const ChainVector& b);

/// All basis elements of the given arity and homological degree, in a
/// deterministic order.  Throws BudgetError when the basis would exceed
/// maxElements.
std::vector<ChainBasisElement> chainBasis(const Signature& sig, int arity,
                                          int degree, ShapeEnumerator& shapes,
                                          std::size_t maxElements = 5'000'000);

/// The Koszul-style differential: entry p of the black datum is whitened
/// with sign (-1)^{p-1}; along its direction the cells merge and each merged
/// cell gains a root cut labelled by the whitened generator, then
/// canonicalizes.  Degree-0 elements map to zero.
ChainVector differential(const Signature& sig, const ChainBasisElement& e);

/// The directions (with labels) along which the element can be blackened:
/// not already black, and the full equal-spaced white system is an
/// admissible root of every cell.  At most one entry per direction
/// (asserted; a duplicate raises DuplicateAdmissibleRoots).
std::vector<std::pair<int, int>> cutThroughData(const Signature& sig,
                                                const ChainBasisElement& e);

/// The contracting homotopy: every cut-through system is blackened; the new
/// wedge factor enters at its sorted position with the corresponding parity
/// sign.  Elements with no cut-through data map to zero.
ChainVector homotopy(const Signature& sig, const ChainBasisElement& e);

ChainVector applyDifferential(const Signature& sig, const ChainVector& v);
ChainVector applyHomotopy(const Signature& sig, const ChainVector& v);

struct RankRow {
  int degree = 0;
  std::size_t dim = 0;
  std::size_t rankD = 0;     // rank of d : degree -> degree-1
  std::size_t homology = 0;  // dim - rankD - rank(d : degree+1 -> degree)
};

struct ResolutionReport {
  bool pass = false;
  int arity = 0;
  std::vector<RankRow> rows;
  bool minimal = false;  // every differential image has a white cut
  std::string failure;
};

/// Exact ranks of the differential at one arity and the homology they give;
/// asserts the homology of the complex is the unit collection and that the
/// differential lands in the augmentation ideal.
ResolutionReport homologyRanks(const Signature& sig, int arity,
                               ShapeEnumerator& shapes,
                               std::size_t maxElements = 5'000'000);

}  // namespace cutoperad
