#pragma once

#include <random>

#include "cutoperad/enumeration.hpp"
#include "cutoperad/geometry.hpp"
#include "cutoperad/operad.hpp"
#include "cutoperad/terms.hpp"

namespace cutoperad::testing {

using Rng = std::mt19937_64;

inline Signature sigBinary2d() { return Signature::binary2d(); }

inline Signature sigBinary1d() { return Signature(1, {{{"a", 2}}}); }

inline Signature sigTernary1d() { return Signature(1, {{{"b", 3}}}); }

// d=2, direction 1 has a binary and a ternary generator, direction 2 binary
inline Signature sigMixed2d() {
  return Signature(2, {{{"p", 2}, {"q", 3}}, {{"r", 2}}});
}

inline Signature sigBinary3d() {
  return Signature(3, {{{"x", 2}}, {{"y", 2}}, {{"z", 2}}});
}

// Arities that admit at least one shape, from the counting recurrence.
inline std::vector<bool> feasibleArities(const Signature& sig, int maxN) {
  std::vector<bool> ok(maxN + 1, false);
  CountTable t = countByRecurrence(sig, maxN);
  for (int n = 1; n <= maxN; ++n) ok[n] = t.at(n).shapes > 0;
  return ok;
}

// Uniform-ish random construction tree of the exact target arity; parts of
// compositions are rejection-sampled against feasibility.
inline SubdivisionPtr randomTree(const Signature& sig, Rng& rng, int arity,
                                 const std::vector<bool>& feasible) {
  if (arity == 1) return Subdivision::leaf();
  std::vector<int> usable;
  for (int g = 0; g < sig.generatorCount(); ++g)
    if (sig.gen(g).arity <= arity) usable.push_back(g);
  for (int attempt = 0;; ++attempt) {
    if (attempt > 2048)
      throw StructuralError("randomTree: no feasible decomposition");
    int genId = usable[rng() % usable.size()];
    int m = sig.gen(genId).arity;
    // random composition of `arity` into m positive parts
    std::vector<int> parts(m, 1);
    for (int extra = arity - m; extra > 0; --extra) ++parts[rng() % m];
    bool ok = true;
    for (int p : parts)
      if (!feasible[p]) ok = false;
    if (!ok) continue;
    std::vector<SubdivisionPtr> children;
    children.reserve(m);
    for (int p : parts) children.push_back(randomTree(sig, rng, p, feasible));
    return Subdivision::cut(sig, genId, std::move(children));
  }
}

inline std::vector<int> randomNumbering(Rng& rng, int n) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Random term = random construction tree with a random leaf numbering.
inline TermPtr randomNumberedTerm(const Signature& sig, Rng& rng, int arity,
                                  const std::vector<bool>& feasible) {
  SubdivisionPtr tree = randomTree(sig, rng, arity, feasible);
  std::vector<int> numbers = randomNumbering(rng, arity);
  // read the tree as a term directly
  int pos = 0;
  auto rec = [&](auto&& self, const SubdivisionPtr& s) -> TermPtr {
    if (s->isLeaf()) return numberLeaf(numbers[pos++]);
    std::vector<TermPtr> cs;
    for (const auto& c : s->children()) cs.push_back(self(self, c));
    return termNode(sig, s->generator(), std::move(cs));
  };
  return rec(rec, tree);
}

inline CutOperadElement randomElement(const Signature& sig, Rng& rng,
                                      int arity,
                                      const std::vector<bool>& feasible) {
  return evaluate(sig, randomNumberedTerm(sig, rng, arity, feasible));
}

// Applies up to `count` random interchange moves; steps with no applicable
// move leave the term unchanged.
inline TermPtr mutateByInterchanges(const Signature& sig, Rng& rng, TermPtr t,
                                    int count, int* applied = nullptr) {
  int done = 0;
  for (int i = 0; i < count; ++i) {
    std::vector<TermPtr> moves = interchangeMoves(sig, t);
    if (moves.empty()) break;
    t = moves[rng() % moves.size()];
    ++done;
  }
  if (applied) *applied = done;
  return t;
}

inline Permutation randomPermutation(Rng& rng, int n) {
  return Permutation(randomNumbering(rng, n));
}

}  // namespace cutoperad::testing
