#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cutoperad/errors.hpp"

namespace cutoperad {

struct GeneratorInfo {
  std::string name;
  int arity = 0;      // >= 2
  int direction = 0;  // 1-based
};

/// A tuple of free symmetric collections, one per direction: for each
/// direction 1..d a finite ordered list of named generators of arity >= 2.
/// Generator names are globally unique; generators are addressed by a dense
/// id in declaration order.
class Signature {
 public:
  Signature(int d,
            std::vector<std::vector<std::pair<std::string, int>>> generators);

  /// d=2 with one binary generator per direction: h (dir 1) and v (dir 2).
  static Signature binary2d();

  int dims() const { return d_; }
  int generatorCount() const { return static_cast<int>(gens_.size()); }
  const GeneratorInfo& gen(int id) const { return gens_.at(id); }

  /// Ids of the generators living in `direction` (1-based).
  std::span<const int> generators(int direction) const;

  /// Throws LookupError for unknown names.
  int idOf(const std::string& name) const;
  bool has(const std::string& name) const { return byName_.count(name) != 0; }

  /// Maximum generator arity over the whole signature.
  int maxArity() const { return maxArity_; }

  /// Number of direction-`k` generators of arity `n` (the Dirichlet
  /// coefficient data of the k-th free collection).
  int generatorsOfArity(int direction, int n) const;

 private:
  int d_;
  int maxArity_ = 0;
  std::vector<GeneratorInfo> gens_;
  std::vector<std::vector<int>> byDirection_;
  std::unordered_map<std::string, int> byName_;
};

}  // namespace cutoperad
