#pragma once

#include <span>
#include <vector>

#include "cutoperad/geometry.hpp"
#include "cutoperad/subdivision.hpp"

namespace cutoperad {

/// A permutation of {1..n}, stored as the list of images.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);

  /// The row/column exchange on {1..kl}: (i-1)l+j |-> (j-1)k+i for
  /// 1<=i<=k, 1<=j<=l.
  static Permutation rowsToColumns(int k, int l);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  Permutation inverse() const;

 private:
  std::vector<int> images_;
};

/// (sigma * tau)(i) = sigma(tau(i)).
Permutation operator*(const Permutation& sigma, const Permutation& tau);
bool operator==(const Permutation& a, const Permutation& b);

/// An element of the cut operad: a canonical labelled subdivision of the
/// unit cube.  Construct through the functions below, which maintain
/// canonicality.
using CutOperadElement = LabelledSubdivision;

/// The identity: a single box numbered 1.
CutOperadElement identityElement();

/// The a parallel slabs in the generator's direction, numbered 1..a by
/// increasing coordinate, all a-1 cuts labelled by the generator.
CutOperadElement generatorElement(const Signature& sig, int genId);
CutOperadElement generatorElement(const Signature& sig,
                                  const std::string& name);

/// Full operadic composition: grafts the inner elements at the outer leaves
/// in numbering order, renumbers leaves by blocks and re-canonicalizes.
CutOperadElement compose(const Signature& sig, const CutOperadElement& outer,
                         std::span<const CutOperadElement> inners);

/// outer o_i inner: compose with identities everywhere except position i
/// (1-based).
CutOperadElement partialCompose(const Signature& sig,
                                const CutOperadElement& outer, int position,
                                const CutOperadElement& inner);

/// Right action: the leaf carrying number sigma(i) carries i afterwards.
CutOperadElement act(const CutOperadElement& e, const Permutation& sigma);

bool elementsEqual(const CutOperadElement& a, const CutOperadElement& b);

/// Geometric substitution: affinely rescales each inner form into the
/// corresponding outer box and copies cut labels.  Same result as
/// toGeom(compose(...)); kept as an independent route for cross-checks.
GeomForm substituteGeom(const Signature& sig, const CutOperadElement& outer,
                        std::span<const CutOperadElement> inners);

}  // namespace cutoperad
