#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cutoperad/numeric.hpp"
#include "cutoperad/subdivision.hpp"

namespace cutoperad {

/// Face label of a box face lying on the boundary of the unit cube.
inline constexpr int kBoundary = -1;

struct GeomBox {
  std::vector<Rat> lo, hi;          // corner coordinates, size d
  std::vector<int> faceLo, faceHi;  // per direction: generator id or kBoundary
  int index = 0;                    // box number (or an opaque payload)
};

/// Exact geometric normal form of a labelled subdivision: the set of leaf
/// boxes tiling the unit cube with per-face cut labels.  Boxes are kept
/// sorted by coordinates, so equality is plain structural comparison.
struct GeomForm {
  int d = 0;
  std::vector<GeomBox> boxes;
};

/// Realizes a shape; box indices are the 1-based canonical leaf positions.
GeomForm realizeShape(const Signature& sig, const SubdivisionPtr& s);

/// Realizes a shape with explicit per-leaf payloads (leafValues[p] becomes
/// the index of the box coming from leaf position p).
GeomForm realizeWithPayload(const Signature& sig, const SubdivisionPtr& s,
                            const std::vector<int>& leafValues);

GeomForm toGeom(const Signature& sig, const LabelledSubdivision& s);

bool geomEqual(const GeomForm& a, const GeomForm& b);

std::string serializeGeom(const Signature& sig, const GeomForm& g);

/// Checks the GeomForm invariants (tiling, label coherence); throws
/// StructuralError on violation.  Intended for tests and input validation,
/// not for hot paths.
void validateGeom(const Signature& sig, const GeomForm& g);

/// All (direction, generator id) pairs that are admissible root cuts: the
/// m-1 full hyperplanes are entirely covered by cuts labelled by the
/// generator and every slab is recursively a valid subdivision.  Sorted by
/// direction, then by generator id.
std::vector<std::pair<int, int>> admissibleRoots(const Signature& sig,
                                                 const GeomForm& g);
std::vector<std::pair<int, int>> admissibleRoots(const Signature& sig,
                                                 const SubdivisionPtr& s);

struct CanonicalizedGeom {
  SubdivisionPtr shape;           // canonical tree
  std::vector<int> leafPayload;   // p-th canonical leaf <- box index
};

/// Recovers the canonical tree of a geometric subdivision: at every level the
/// root cut is the admissible root with minimum direction.  Throws
/// StructuralError if the geometry is not a subdivision at all, and
/// DuplicateAdmissibleRoots if any level sees two admissible roots in one
/// direction (believed impossible; surfaced, never patched).
CanonicalizedGeom canonicalizeGeom(const Signature& sig, const GeomForm& g);

/// Canonical form of an arbitrary construction tree.
SubdivisionPtr canonicalize(const Signature& sig, const SubdivisionPtr& raw);

/// Canonical form of a construction tree whose leaf at position p carries
/// leafNumbers[p]; the numbers travel with the leaves.
LabelledSubdivision canonicalizeLabelled(const Signature& sig,
                                         const SubdivisionPtr& raw,
                                         const std::vector<int>& leafNumbers);

/// Splits a labelled subdivision along an admissible root (direction, gen)
/// into its slabs, each rescaled and canonicalized; numbers travel with the
/// leaves.  Throws StructuralError if the root is not admissible.
std::vector<LabelledSubdivision> splitAlongRoot(const Signature& sig,
                                                const LabelledSubdivision& s,
                                                int direction, int genId);

}  // namespace cutoperad
