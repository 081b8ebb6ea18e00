#include "cutoperad/assass.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <set>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "cutoperad/errors.hpp"
#include "cutoperad/sexpr.hpp"

namespace cutoperad {

AATermPtr aaLeaf(int number) {
  if (number < 1) throw StructuralError("leaf numbers are positive");
  auto* t = new AATerm();
  t->leaf = number;
  return AATermPtr(t);
}

AATermPtr aaNode(int op, std::vector<AATermPtr> children) {
  if (op != AATerm::kDot && op != AATerm::kStar)
    throw StructuralError("invalid operation");
  std::vector<AATermPtr> flat;
  for (auto& c : children) {
    if (!c) throw StructuralError("null child");
    if (c->op == op)
      flat.insert(flat.end(), c->children.begin(), c->children.end());
    else
      flat.push_back(std::move(c));
  }
  if (flat.empty()) throw StructuralError("empty node");
  if (flat.size() == 1) return flat.front();
  auto* t = new AATerm();
  t->op = op;
  t->children = std::move(flat);
  return AATermPtr(t);
}

int aaArity(const AATermPtr& t) {
  if (t->isLeaf()) return 1;
  int n = 0;
  for (const auto& c : t->children) n += aaArity(c);
  return n;
}

namespace {

AATermPtr aaFromSexpr(const Sexpr& e) {
  if (!e.isList) {
    try {
      size_t used = 0;
      int v = std::stoi(e.atom, &used);
      if (used == e.atom.size()) return aaLeaf(v);
    } catch (const std::exception&) {
    }
    throw ParseError("leaf must be a positive integer, got '" + e.atom + "'",
                     e.pos);
  }
  if (e.items.size() < 3)
    throw ParseError("operator nodes need at least two arguments", e.pos);
  const Sexpr& head = e.items.front();
  int op;
  if (head.atom == ".")
    op = AATerm::kDot;
  else if (head.atom == "*")
    op = AATerm::kStar;
  else
    throw ParseError("expected operator '.' or '*'", head.pos);
  std::vector<AATermPtr> children;
  for (size_t i = 1; i < e.items.size(); ++i)
    children.push_back(aaFromSexpr(e.items[i]));
  return aaNode(op, std::move(children));
}

}  // namespace

namespace {

void collectLeaves(const AATermPtr& t, std::vector<int>& out) {
  if (t->isLeaf()) {
    out.push_back(t->leaf);
    return;
  }
  for (const auto& c : t->children) collectLeaves(c, out);
}

}  // namespace

AATermPtr parseAA(std::string_view text) {
  AATermPtr t = aaFromSexpr(parseSexpr(text));
  std::vector<int> leaves;
  collectLeaves(t, leaves);
  std::vector<char> seen(leaves.size() + 1, 0);
  for (int v : leaves) {
    if (v < 1 || v > static_cast<int>(leaves.size()) || seen[v])
      throw StructuralError("leaves must be a bijection onto {1..n}");
    seen[v] = 1;
  }
  return t;
}

static void printAAInto(const AATermPtr& t, std::string& out) {
  if (t->isLeaf()) {
    out += std::to_string(t->leaf);
    return;
  }
  out += '(';
  out += t->op == AATerm::kDot ? '.' : '*';
  for (const auto& c : t->children) {
    out += ' ';
    printAAInto(c, out);
  }
  out += ')';
}

std::string printAA(const AATermPtr& t) {
  std::string out;
  printAAInto(t, out);
  return out;
}

namespace {

// part [from, to) of a node's children, regrouped as a single term
AATermPtr segment(int op, const std::vector<AATermPtr>& children, int from,
                  int to) {
  if (to - from == 1) return children[from];
  std::vector<AATermPtr> part(children.begin() + from, children.begin() + to);
  return aaNode(op, std::move(part));
}

// All results of one transpose move applied at this node (not in subtrees).
void movesAtNode(const AATerm& node, std::vector<AATermPtr>& out) {
  const int opA = node.op;
  const int opB = opA == AATerm::kDot ? AATerm::kStar : AATerm::kDot;
  const int len = static_cast<int>(node.children.size());
  for (int i = 0; i < len; ++i) {
    if (node.children[i]->op != opB) continue;
    int minParts = static_cast<int>(node.children[i]->children.size());
    for (int j = i + 1; j < len; ++j) {
      if (node.children[j]->op != opB) break;
      minParts = std::min(minParts,
                          static_cast<int>(node.children[j]->children.size()));
      const int r = j - i + 1;
      for (int c = 2; c <= minParts; ++c) {
        // iterate all split-position tuples: splits[t] is a (c-1)-subset of
        // the member's inner joints, as increasing cut positions
        std::vector<std::vector<int>> splits(r);
        for (int t = 0; t < r; ++t) {
          splits[t].resize(c - 1);
          for (int s = 0; s < c - 1; ++s) splits[t][s] = s + 1;
        }
        auto advance = [&](int t) -> bool {
          const int kt =
              static_cast<int>(node.children[i + t]->children.size());
          int s = c - 2;
          while (s >= 0 && splits[t][s] == kt - (c - 1 - s)) --s;
          if (s < 0) return false;
          ++splits[t][s];
          for (int s2 = s + 1; s2 < c - 1; ++s2)
            splits[t][s2] = splits[t][s2 - 1] + 1;
          return true;
        };
        for (;;) {
          // build the transposed block
          std::vector<AATermPtr> columns(c);
          for (int s = 0; s < c; ++s) {
            std::vector<AATermPtr> column(r);
            for (int t = 0; t < r; ++t) {
              const auto& member = node.children[i + t];
              int from = s == 0 ? 0 : splits[t][s - 1];
              int to = s == c - 1 ? static_cast<int>(member->children.size())
                                  : splits[t][s];
              column[t] = segment(opB, member->children, from, to);
            }
            columns[s] = aaNode(opA, std::move(column));
          }
          AATermPtr m = aaNode(opB, std::move(columns));
          if (len == r) {
            out.push_back(std::move(m));
          } else {
            std::vector<AATermPtr> rest;
            rest.reserve(len - r + 1);
            rest.insert(rest.end(), node.children.begin(),
                        node.children.begin() + i);
            rest.push_back(std::move(m));
            rest.insert(rest.end(), node.children.begin() + j + 1,
                        node.children.end());
            out.push_back(aaNode(opA, std::move(rest)));
          }
          // advance the split tuple odometer
          int t = r - 1;
          while (t >= 0 && !advance(t)) {
            const int kt =
                static_cast<int>(node.children[i + t]->children.size());
            for (int s = 0; s < c - 1; ++s) splits[t][s] = s + 1;
            (void)kt;
            --t;
          }
          if (t < 0) break;
        }
      }
    }
  }
}

void collectAAMoves(const AATermPtr& t,
                    const std::function<AATermPtr(AATermPtr)>& rebuild,
                    std::vector<AATermPtr>& out) {
  if (t->isLeaf()) return;
  std::vector<AATermPtr> local;
  movesAtNode(*t, local);
  for (auto& m : local) out.push_back(rebuild(std::move(m)));
  for (size_t i = 0; i < t->children.size(); ++i) {
    auto rebuildChild = [&, i](AATermPtr replacement) {
      std::vector<AATermPtr> cs = t->children;
      cs[i] = std::move(replacement);
      return rebuild(aaNode(t->op, std::move(cs)));
    };
    collectAAMoves(t->children[i], rebuildChild, out);
  }
}

}  // namespace

std::vector<AATermPtr> aaMoves(const AATermPtr& t) {
  std::vector<AATermPtr> raw;
  collectAAMoves(t, [](AATermPtr x) { return x; }, raw);
  std::set<std::string> seen;
  std::vector<std::pair<std::string, AATermPtr>> keyed;
  for (auto& m : raw) {
    std::string key = printAA(m);
    if (seen.insert(key).second) keyed.emplace_back(std::move(key), std::move(m));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AATermPtr> out;
  out.reserve(keyed.size());
  for (auto& [k, m] : keyed) out.push_back(std::move(m));
  return out;
}

bool aaReplay(std::span<const std::string> path) {
  if (path.empty()) return false;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    AATermPtr cur = parseAA(path[i]);
    bool ok = false;
    for (const auto& m : aaMoves(cur))
      if (printAA(m) == path[i + 1]) ok = true;
    if (!ok) return false;
  }
  return true;
}

namespace {

struct SearchSide {
  struct Entry {
    std::string key;
    std::uint32_t parent;  // index into entries; self for roots
  };
  std::deque<Entry> entries;
  std::unordered_map<std::string_view, std::uint32_t> seen;
  std::vector<std::uint32_t> frontier;
  std::uint64_t bytes = 0;

  std::uint32_t add(std::string key, std::uint32_t parent) {
    bytes += key.size() + 96;  // rough per-state footprint
    entries.push_back(Entry{std::move(key), parent});
    std::uint32_t id = static_cast<std::uint32_t>(entries.size() - 1);
    seen.emplace(entries.back().key, id);
    return id;
  }

  std::vector<std::string> chainToRoot(std::uint32_t id) const {
    std::vector<std::string> out;
    for (;;) {
      out.push_back(entries[id].key);
      if (entries[id].parent == id) break;
      id = entries[id].parent;
    }
    return out;  // entry ... root
  }
};

AASearchResult foundResult(const SearchSide& fwd, std::uint32_t fwdId,
                           const SearchSide& bwd, std::uint32_t bwdId,
                           std::uint64_t stored) {
  // src ... fwdId, then the bwd chain continues to dst
  std::vector<std::string> head = fwd.chainToRoot(fwdId);
  std::reverse(head.begin(), head.end());
  std::vector<std::string> tail = bwd.chainToRoot(bwdId);
  if (!head.empty() && !tail.empty() && head.back() == tail.front())
    tail.erase(tail.begin());
  AASearchResult r;
  r.status = AASearchResult::Status::Found;
  r.path = std::move(head);
  r.path.insert(r.path.end(), tail.begin(), tail.end());
  r.statesStored = stored;
  if (!aaReplay(r.path))
    throw StructuralError("search produced a path that does not replay");
  return r;
}

nlohmann::json loadCache(const std::string& file) {
  std::ifstream in(file);
  if (!in) return nlohmann::json::array();
  try {
    nlohmann::json j;
    in >> j;
    if (j.is_array()) return j;
  } catch (const std::exception&) {
  }
  return nlohmann::json::array();
}

}  // namespace

AASearchResult aaReachable(const AATermPtr& src, const AATermPtr& dst,
                           const AASearchOptions& opts) {
  if (opts.stateBudget == 0) throw StructuralError("budget must be positive");
  if (aaArity(src) != aaArity(dst))
    throw ArityError("search endpoints have different arities");
  std::string srcKey = printAA(src);
  std::string dstKey = printAA(dst);

  nlohmann::json cache;
  if (!opts.cacheFile.empty()) {
    cache = loadCache(opts.cacheFile);
    for (const auto& entry : cache) {
      if (entry.value("src", "") != srcKey || entry.value("dst", "") != dstKey)
        continue;
      if (entry.value("status", "") == "found") {
        AASearchResult r;
        r.status = AASearchResult::Status::Found;
        for (const auto& step : entry["path"])
          r.path.push_back(step.get<std::string>());
        if (aaReplay(r.path)) {
          r.fromCache = true;
          r.note = "cached path";
          return r;
        }
      } else if (entry.value("budget", std::uint64_t(0)) >= opts.stateBudget) {
        AASearchResult r;
        r.status = AASearchResult::Status::Inconclusive;
        r.fromCache = true;
        r.note = "cached inconclusive at budget >= requested";
        return r;
      }
    }
  }

  AASearchResult result;
  if (srcKey == dstKey) {
    result.status = AASearchResult::Status::Found;
    result.path = {srcKey};
    result.statesStored = 2;
    return result;
  }

  SearchSide fwd, bwd;
  fwd.frontier.push_back(fwd.add(srcKey, 0));
  bwd.frontier.push_back(bwd.add(dstKey, 0));

  auto stored = [&] {
    return static_cast<std::uint64_t>(fwd.entries.size() + bwd.entries.size());
  };

  bool exhausted = false;
  std::string note;
  while (!fwd.frontier.empty() && !bwd.frontier.empty()) {
    // expand the smaller frontier one full level
    SearchSide& mine = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
    SearchSide& other = &mine == &fwd ? bwd : fwd;
    std::vector<std::uint32_t> next;
    bool metOther = false;
    std::uint32_t meetMine = 0, meetOther = 0;
    for (std::uint32_t id : mine.frontier) {
      AATermPtr cur = parseAA(mine.entries[id].key);
      for (const auto& m : aaMoves(cur)) {
        std::string key = printAA(m);
        if (mine.seen.count(key)) continue;
        auto hit = other.seen.find(key);
        std::uint32_t newId = mine.add(std::move(key), id);
        if (hit != other.seen.end()) {
          metOther = true;
          meetMine = newId;
          meetOther = hit->second;
          break;
        }
        next.push_back(newId);
        if (stored() > opts.stateBudget) {
          exhausted = true;
          note = "state budget exhausted";
          break;
        }
        if (fwd.bytes + bwd.bytes > opts.memoryBudgetBytes) {
          exhausted = true;
          note = "memory watchdog tripped";
          break;
        }
      }
      if (metOther || exhausted) break;
    }
    if (metOther) {
      const SearchSide& f = &mine == &fwd ? mine : other;
      std::uint32_t fId = &mine == &fwd ? meetMine : meetOther;
      const SearchSide& b = &mine == &fwd ? other : mine;
      std::uint32_t bId = &mine == &fwd ? meetOther : meetMine;
      result = foundResult(f, fId, b, bId, stored());
      break;
    }
    if (exhausted) {
      result.status = AASearchResult::Status::Inconclusive;
      result.statesStored = stored();
      result.note = note;
      break;
    }
    mine.frontier = std::move(next);
    if (mine.frontier.empty()) {
      // the whole equivalence class of one side is exhausted and the other
      // endpoint was never seen
      result.status = AASearchResult::Status::Inconclusive;
      result.statesStored = stored();
      result.note = "component exhausted without meeting";
      break;
    }
  }

  if (!opts.cacheFile.empty()) {
    nlohmann::json entry;
    entry["src"] = srcKey;
    entry["dst"] = dstKey;
    entry["budget"] = opts.stateBudget;
    if (result.status == AASearchResult::Status::Found) {
      entry["status"] = "found";
      entry["path"] = result.path;
    } else {
      entry["status"] = "inconclusive";
    }
    cache.push_back(entry);
    std::ofstream out(opts.cacheFile);
    if (out) out << cache.dump(1) << "\n";
  }
  return result;
}

}  // namespace cutoperad
