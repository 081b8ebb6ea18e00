#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace cutoperad {

struct AATerm;
using AATermPtr = std::shared_ptr<const AATerm>;

/// A term over two associative operations '.' and '*', flattened modulo
/// associativity: every internal node has >= 2 children and no child shares
/// its parent's operation.  Leaves carry 1..n.
struct AATerm {
  static constexpr int kLeaf = 0;
  static constexpr int kDot = 1;
  static constexpr int kStar = 2;

  int op = kLeaf;
  int leaf = 0;
  std::vector<AATermPtr> children;

  bool isLeaf() const { return op == kLeaf; }
};

AATermPtr aaLeaf(int number);

/// Flattening constructor: children carrying the same operation are spliced
/// in place; a single remaining child dissolves the node.
AATermPtr aaNode(int op, std::vector<AATermPtr> children);

int aaArity(const AATermPtr& t);

/// Surface syntax: `(. (* 1 2) (* 3 4 5 6) (* 7 8 9))` with operator atoms
/// `.` and `*`.
AATermPtr parseAA(std::string_view text);
std::string printAA(const AATermPtr& t);

/// All terms one interchange move away, deduplicated and sorted by their
/// serialization.  A move picks a node with operation A, a consecutive block
/// of r >= 2 children that are all B-nodes, a common number of parts c >= 2
/// with a split of each block member into c groups, and transposes the r x c
/// grid; the schema is closed under inversion, so move lists are symmetric.
std::vector<AATermPtr> aaMoves(const AATermPtr& t);

struct AASearchResult {
  enum class Status { Found, Inconclusive };
  Status status = Status::Inconclusive;
  std::vector<std::string> path;  // serialized terms, src first, dst last
  std::uint64_t statesStored = 0;
  bool fromCache = false;
  std::string note;
};

struct AASearchOptions {
  std::uint64_t stateBudget = 10'000'000;
  std::uint64_t memoryBudgetBytes = std::uint64_t(6) << 30;
  std::string cacheFile;  // empty: no disk cache
};

/// Bidirectional breadth-first search over flattened forms with canonical
/// hashing.  Budget exhaustion is reported as inconclusive, never as
/// inequality.  Found paths are re-validated by replay before returning.
AASearchResult aaReachable(const AATermPtr& src, const AATermPtr& dst,
                           const AASearchOptions& opts = {});

/// True iff every consecutive pair of the path is one move apart.
bool aaReplay(std::span<const std::string> path);

}  // namespace cutoperad
