#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cutoperad/signature.hpp"

namespace cutoperad {

class Subdivision;
using SubdivisionPtr = std::shared_ptr<const Subdivision>;

/// An X-subdivision shape: either a leaf (the trivial subdivision) or a cut
/// node carrying a generator, whose children are the equal slabs ordered by
/// increasing coordinate along the cut axis.  Nodes are immutable and shared;
/// whether a tree is canonical is a property checked by the geometry layer,
/// not enforced by this type.
class Subdivision {
 public:
  static const SubdivisionPtr& leaf();
  static SubdivisionPtr cut(const Signature& sig, int genId,
                            std::vector<SubdivisionPtr> children);

  bool isLeaf() const { return genId_ < 0; }
  int generator() const { return genId_; }
  int direction() const { return direction_; }
  std::span<const SubdivisionPtr> children() const { return children_; }
  int arity() const { return arity_; }

 private:
  Subdivision() = default;
  int genId_ = -1;
  int direction_ = 0;
  int arity_ = 1;
  std::vector<SubdivisionPtr> children_;
};

bool sameShape(const SubdivisionPtr& a, const SubdivisionPtr& b);

/// Compact canonical serialization: "*" for a leaf, "(gen c1 ... cm)" for a
/// cut.  Lexicographic order on these strings is the deterministic shape
/// order used by enumeration.
std::string serializeShape(const Signature& sig, const SubdivisionPtr& s);

/// Parses the serializeShape format back.
SubdivisionPtr parseShape(const Signature& sig, std::string_view text);

/// Canonical leaf traversal is depth first with children in coordinate
/// order; `numbering[p]` is the number carried by the p-th leaf, a bijection
/// onto {1..arity}.
struct LabelledSubdivision {
  SubdivisionPtr shape;
  std::vector<int> numbering;

  int arity() const { return static_cast<int>(numbering.size()); }
};

void validateNumbering(const LabelledSubdivision& s);

}  // namespace cutoperad
