#include "cutoperad/signature.hpp"

namespace cutoperad {

Signature::Signature(
    int d, std::vector<std::vector<std::pair<std::string, int>>> generators)
    : d_(d) {
  if (d < 1) throw StructuralError("signature: d must be >= 1");
  if (static_cast<int>(generators.size()) != d)
    throw StructuralError("signature: expected one generator list per direction");
  byDirection_.resize(d);
  for (int k = 0; k < d; ++k) {
    for (auto& [name, arity] : generators[k]) {
      if (arity < 2)
        throw StructuralError("signature: generator '" + name +
                              "' has arity < 2");
      if (name.empty())
        throw StructuralError("signature: empty generator name");
      if (byName_.count(name))
        throw StructuralError("signature: duplicate generator name '" + name +
                              "'");
      int id = static_cast<int>(gens_.size());
      gens_.push_back(GeneratorInfo{name, arity, k + 1});
      byDirection_[k].push_back(id);
      byName_.emplace(name, id);
      maxArity_ = std::max(maxArity_, arity);
    }
  }
}

Signature Signature::binary2d() {
  return Signature(2, {{{"h", 2}}, {{"v", 2}}});
}

std::span<const int> Signature::generators(int direction) const {
  if (direction < 1 || direction > d_)
    throw LookupError("direction out of range: " + std::to_string(direction));
  return byDirection_[direction - 1];
}

int Signature::idOf(const std::string& name) const {
  auto it = byName_.find(name);
  if (it == byName_.end())
    throw LookupError("unknown generator '" + name + "'");
  return it->second;
}

int Signature::generatorsOfArity(int direction, int n) const {
  int count = 0;
  for (int id : generators(direction))
    if (gens_[id].arity == n) ++count;
  return count;
}

}  // namespace cutoperad
