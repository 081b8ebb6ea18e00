#include "cutoperad/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cutoperad/series.hpp"

namespace cutoperad {

ShapeEnumerator::ShapeEnumerator(const Signature& sig, EnumerationOptions opts)
    : sig_(sig), opts_(opts) {
  if (sig.generatorCount() > 63)
    throw StructuralError("enumeration supports at most 63 generators");
  if (opts_.threads < 1) opts_.threads = 1;
  dirBits_.assign(sig.dims() + 1, 0);
  lowerBits_.assign(sig.dims() + 1, 0);
  for (int g = 0; g < sig.generatorCount(); ++g)
    dirBits_[sig.gen(g).direction] |= std::uint64_t(1) << g;
  for (int k = 2; k <= sig.dims(); ++k)
    lowerBits_[k] = lowerBits_[k - 1] | dirBits_[k - 1];
  byArity_.resize(2);
  masks_.resize(2);
  byArity_[1] = {Subdivision::leaf()};
  masks_[1] = {0};
}

std::span<const SubdivisionPtr> ShapeEnumerator::shapes(int n) {
  if (n < 1) throw StructuralError("arity must be >= 1");
  extendTo(n);
  return byArity_[n];
}

std::uint64_t ShapeEnumerator::mask(int n, std::size_t idx) {
  extendTo(n);
  return masks_[n].at(idx);
}

Int ShapeEnumerator::shapeCount(int n) {
  return Int(shapes(n).size());
}

void ShapeEnumerator::extendTo(int n) {
  while (static_cast<int>(byArity_.size()) <= n) {
    int next = static_cast<int>(byArity_.size());
    byArity_.emplace_back();
    masks_.emplace_back();
    generateArity(next);
  }
}

namespace {

// Compositions of n into m positive parts, lexicographic.
std::vector<std::vector<int>> compositions(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == m - 1) {
      if (rest >= 1) {
        cur[pos] = rest;
        out.push_back(cur);
      }
      return;
    }
    for (int v = 1; rest - v >= m - 1 - pos; ++v) {
      cur[pos] = v;
      self(self, pos + 1, rest - v);
    }
  };
  if (n >= m) rec(rec, 0, n);
  return out;
}

struct RootTask {
  int genId = 0;
  int direction = 0;
  std::vector<int> parts;  // child arities
};

}  // namespace

void ShapeEnumerator::generateArity(int n) {
  // tasks in deterministic order: directions, signature generator order,
  // lexicographic compositions
  std::vector<RootTask> tasks;
  for (int k = 1; k <= sig_.dims(); ++k)
    for (int genId : sig_.generators(k)) {
      int m = sig_.gen(genId).arity;
      for (auto& parts : compositions(n, m))
        tasks.push_back(RootTask{genId, k, parts});
    }

  std::vector<std::vector<SubdivisionPtr>> keptShapes(tasks.size());
  std::vector<std::vector<std::uint64_t>> keptMasks(tasks.size());

  std::atomic<std::uint64_t> sharedCount{generated_};
  std::atomic<bool> overBudget{false};

  auto runTask = [&](std::size_t ti) {
    const RootTask& task = tasks[ti];
    int m = static_cast<int>(task.parts.size());
    std::uint64_t rootBit = std::uint64_t(1) << task.genId;
    std::uint64_t lower = lowerBits_[task.direction];
    std::uint64_t sameDir = dirBits_[task.direction];

    std::vector<std::size_t> idx(m, 0);
    std::vector<std::size_t> sizes(m);
    for (int j = 0; j < m; ++j) {
      sizes[j] = byArity_[task.parts[j]].size();
      if (sizes[j] == 0) return;
    }
    std::uint64_t localCount = 0;
    for (;;) {
      if (overBudget.load(std::memory_order_relaxed)) return;
      if (++localCount % 1024 == 0) {
        if (sharedCount.fetch_add(1024, std::memory_order_relaxed) + 1024 >
            opts_.nodeBudget) {
          overBudget.store(true);
          return;
        }
      }
      std::uint64_t andMask = ~std::uint64_t(0);
      for (int j = 0; j < m; ++j)
        andMask &= masks_[task.parts[j]][idx[j]];
      // canonical iff no direction below the root direction stays admissible
      if ((andMask & lower) == 0) {
        std::vector<SubdivisionPtr> children(m);
        for (int j = 0; j < m; ++j)
          children[j] = byArity_[task.parts[j]][idx[j]];
        keptShapes[ti].push_back(
            Subdivision::cut(sig_, task.genId, std::move(children)));
        keptMasks[ti].push_back(rootBit | (andMask & ~sameDir));
      }
      int j = m - 1;
      while (j >= 0 && ++idx[j] == sizes[j]) idx[j--] = 0;
      if (j < 0) break;
    }
    sharedCount.fetch_add(localCount % 1024, std::memory_order_relaxed);
  };

  int threads = std::min<int>(opts_.threads, static_cast<int>(tasks.size()));
  if (threads <= 1) {
    for (std::size_t ti = 0; ti < tasks.size() && !overBudget; ++ti)
      runTask(ti);
  } else {
    std::atomic<std::size_t> nextTask{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t ti = nextTask.fetch_add(1);
          if (ti >= tasks.size() || overBudget) return;
          runTask(ti);
        }
      });
    for (auto& t : pool) t.join();
  }
  generated_ = sharedCount.load();
  if (overBudget)
    throw BudgetError("enumeration node budget of " +
                      std::to_string(opts_.nodeBudget) + " exceeded at arity " +
                      std::to_string(n));

  // merge in task order: deterministic regardless of scheduling
  for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
    auto& dstS = byArity_[n];
    dstS.insert(dstS.end(), keptShapes[ti].begin(), keptShapes[ti].end());
    auto& dstM = masks_[n];
    dstM.insert(dstM.end(), keptMasks[ti].begin(), keptMasks[ti].end());
  }
}

std::vector<SubdivisionPtr> enumerateShapes(const Signature& sig, int n,
                                            EnumerationOptions opts) {
  ShapeEnumerator e(sig, opts);
  auto span = e.shapes(n);
  std::vector<std::pair<std::string, SubdivisionPtr>> keyed;
  keyed.reserve(span.size());
  for (const auto& s : span) keyed.emplace_back(serializeShape(sig, s), s);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SubdivisionPtr> out;
  out.reserve(keyed.size());
  for (auto& [key, s] : keyed) out.push_back(std::move(s));
  return out;
}

CountTable countByEnumeration(const Signature& sig, int maxArity,
                              EnumerationOptions opts) {
  ShapeEnumerator e(sig, opts);
  CountTable t;
  for (int n = 1; n <= maxArity; ++n) {
    Int shapes = e.shapeCount(n);
    t.rows.push_back(CountRow{n, shapes, shapes * factorial(n)});
  }
  return t;
}

CountTable countByRecurrence(const Signature& sig, int maxArity) {
  IntSeries f = shapeSeries(sig, maxArity);
  CountTable t;
  for (int n = 1; n <= maxArity; ++n) {
    const Rat& c = f.at(n);
    if (boost::multiprecision::denominator(c) != 1 || c < 0)
      throw StructuralError("recurrence produced a non-integral shape count");
    Int shapes = boost::multiprecision::numerator(c);
    t.rows.push_back(CountRow{n, shapes, shapes * factorial(n)});
  }
  return t;
}

CrosscheckReport crosscheck(const Signature& sig, int maxArity,
                            EnumerationOptions opts) {
  CrosscheckReport r;
  CountTable brute = countByEnumeration(sig, maxArity, opts);
  CountTable rec = countByRecurrence(sig, maxArity);
  for (int n = 1; n <= maxArity; ++n) {
    if (brute.at(n).shapes != rec.at(n).shapes) {
      r.pass = false;
      r.firstMismatchArity = n;
      r.enumerated = brute.at(n).shapes;
      r.predicted = rec.at(n).shapes;
      break;
    }
  }
  r.table = std::move(brute);
  return r;
}

}  // namespace cutoperad
