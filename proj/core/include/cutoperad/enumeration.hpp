#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cutoperad/numeric.hpp"
#include "cutoperad/subdivision.hpp"

namespace cutoperad {

struct CountRow {
  int arity = 0;
  Int shapes;    // canonical subdivisions (association types)
  Int elements;  // shapes * n!
};

struct CountTable {
  std::vector<CountRow> rows;  // rows[i] is arity i+1
  const CountRow& at(int arity) const { return rows.at(arity - 1); }
};

struct EnumerationOptions {
  std::uint64_t nodeBudget = 10'000'000;  // candidate constructions
  int threads = 1;
};

/// Exhaustive generator of canonical subdivisions by arity.  Candidate roots
/// (direction, generator, child-arity composition) are expanded over already
/// generated canonical children and kept only when the root direction is the
/// minimal admissible one, so no post-hoc deduplication happens.  Lists are
/// memoized per arity in a deterministic order independent of the thread
/// count.
class ShapeEnumerator {
 public:
  explicit ShapeEnumerator(const Signature& sig, EnumerationOptions opts = {});

  const Signature& signature() const { return sig_; }

  /// All canonical shapes of arity n, generation order.
  std::span<const SubdivisionPtr> shapes(int n);

  /// Admissibility mask of shapes(n)[idx]: bit g is set iff generator g is
  /// an admissible root of the shape.
  std::uint64_t mask(int n, std::size_t idx);

  Int shapeCount(int n);
  std::uint64_t generatedNodes() const { return generated_; }

 private:
  void extendTo(int n);
  void generateArity(int n);

  const Signature& sig_;
  EnumerationOptions opts_;
  std::uint64_t generated_ = 0;
  std::vector<std::vector<SubdivisionPtr>> byArity_;  // [n]
  std::vector<std::vector<std::uint64_t>> masks_;
  std::vector<std::uint64_t> dirBits_;      // per direction: OR of its gen bits
  std::vector<std::uint64_t> lowerBits_;    // bits of all strictly lower dirs
};

/// All canonical shapes of arity n in lexicographic order of their
/// serialization.
std::vector<SubdivisionPtr> enumerateShapes(const Signature& sig, int n,
                                            EnumerationOptions opts = {});

CountTable countByEnumeration(const Signature& sig, int maxArity,
                              EnumerationOptions opts = {});

/// Counting through the functional equation: Dirichlet product over the
/// directions, N-transform, compositional inversion.
CountTable countByRecurrence(const Signature& sig, int maxArity);

struct CrosscheckReport {
  bool pass = true;
  int firstMismatchArity = 0;
  Int enumerated, predicted;  // at the first mismatch
  CountTable table;           // the agreed table (enumeration side)
};

/// Asserts brute-force counts equal the recurrence counts for n <= maxArity.
CrosscheckReport crosscheck(const Signature& sig, int maxArity,
                            EnumerationOptions opts = {});

}  // namespace cutoperad
