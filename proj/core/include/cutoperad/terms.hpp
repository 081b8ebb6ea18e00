#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cutoperad/operad.hpp"

namespace cutoperad {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// A term of the free product of the d free operads: internal nodes carry a
/// generator, leaves carry either a number (operadic mode) or an atom from a
/// generating alphabet (free-algebra mode).
struct Term {
  int genId = -1;  // -1 at leaves
  std::vector<TermPtr> children;
  int leafNumber = 0;  // > 0 for numbered leaves
  std::string atom;    // nonempty for alphabet leaves

  bool isLeaf() const { return genId < 0; }
};

TermPtr numberLeaf(int number);
TermPtr atomLeaf(std::string atom);
TermPtr termNode(const Signature& sig, int genId, std::vector<TermPtr> children);

int termArity(const TermPtr& t);

/// S-expression surface syntax: `(gen child ...)`, leaves are positive
/// integers or double-quoted atoms, e.g. `(h (v 1 2) (v 3 4))`.
TermPtr parseTerm(const Signature& sig, std::string_view text);
std::string printTerm(const Signature& sig, const TermPtr& t);

/// The quotient homomorphism onto the cut operad: node (k,x) goes to the
/// generator slab element, composition is composition.  Requires a numbered
/// term whose leaves are a bijection onto {1..n}.
CutOperadElement evaluate(const Signature& sig, const TermPtr& t);

/// Equality in the Boardman-Vogt tensor product: both terms evaluate to the
/// same geometric form.
bool equivalent(const Signature& sig, const TermPtr& a, const TermPtr& b);

/// The canonical section of evaluate: reads the canonical tree back as a
/// term; evaluate(canonicalTerm(e)) == e.
TermPtr canonicalTerm(const Signature& sig, const CutOperadElement& e);

/// All terms obtained from t by one interchange move: a node gamma(w; u...)
/// whose children all carry the same generator u of another direction is
/// transposed to gamma(u; w...), and the leaves travel with their subtrees.
std::vector<TermPtr> interchangeMoves(const Signature& sig, const TermPtr& t);

/// An element of the free d-fold interchange algebra on an alphabet:
/// canonical shape plus the alphabet labels of the leaves in canonical
/// order (repetitions allowed).
struct FreeAlgebraElement {
  SubdivisionPtr shape;
  std::vector<std::string> labels;
};

FreeAlgebraElement freeGenerator(std::string label);

/// Stacks the arguments along the generator's direction into equal slabs,
/// labels the new cuts by the generator, and canonicalizes.
FreeAlgebraElement freeMult(const Signature& sig, int genId,
                            std::span<const FreeAlgebraElement> args);

/// Evaluates an atom-leaf term in the free algebra.
FreeAlgebraElement evaluateFree(const Signature& sig, const TermPtr& t);

bool freeEqual(const FreeAlgebraElement& a, const FreeAlgebraElement& b);

}  // namespace cutoperad
