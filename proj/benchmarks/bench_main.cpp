#include <benchmark/benchmark.h>

#include <random>

#include "cutoperad/assass.hpp"
#include "cutoperad/enumeration.hpp"
#include "cutoperad/homology.hpp"
#include "cutoperad/series.hpp"
#include "cutoperad/terms.hpp"

using namespace cutoperad;

namespace {

SubdivisionPtr sampleTree(const Signature& sig, std::mt19937_64& rng,
                          int arity) {
  if (arity == 1) return Subdivision::leaf();
  int genId = static_cast<int>(rng() % sig.generatorCount());
  while (sig.gen(genId).arity > arity)
    genId = static_cast<int>(rng() % sig.generatorCount());
  int m = sig.gen(genId).arity;
  std::vector<int> parts(m, 1);
  for (int extra = arity - m; extra > 0; --extra) ++parts[rng() % m];
  std::vector<SubdivisionPtr> children;
  for (int p : parts) children.push_back(sampleTree(sig, rng, p));
  return Subdivision::cut(sig, genId, std::move(children));
}

void BM_Canonicalize(benchmark::State& state) {
  Signature sig = Signature::binary2d();
  std::mt19937_64 rng(1);
  std::vector<SubdivisionPtr> trees;
  for (int i = 0; i < 64; ++i)
    trees.push_back(sampleTree(sig, rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize(sig, trees[i % trees.size()]));
    ++i;
  }
}
BENCHMARK(BM_Canonicalize)->Arg(6)->Arg(10)->Arg(14);

void BM_Compose(benchmark::State& state) {
  Signature sig = Signature::binary2d();
  CutOperadElement h = generatorElement(sig, "h");
  CutOperadElement v = generatorElement(sig, "v");
  std::vector<CutOperadElement> inners = {v, v};
  for (auto _ : state)
    benchmark::DoNotOptimize(compose(sig, h, inners));
}
BENCHMARK(BM_Compose);

void BM_CountShapes(benchmark::State& state) {
  Signature sig = Signature::binary2d();
  for (auto _ : state) {
    ShapeEnumerator e(sig);
    benchmark::DoNotOptimize(e.shapeCount(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_CountShapes)->Arg(6)->Arg(8);

void BM_SeriesInverse(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  IntSeries g(order);
  g.set(1, 1);
  g.set(2, -2);
  g.set(4, 1);
  for (auto _ : state) benchmark::DoNotOptimize(seriesInverse(g));
}
BENCHMARK(BM_SeriesInverse)->Arg(10)->Arg(30);

void BM_AAMoves(benchmark::State& state) {
  AATermPtr t = parseAA("(. (* 1 2) (* 3 4 5 6) (* 7 8 9))");
  for (auto _ : state) benchmark::DoNotOptimize(aaMoves(t));
}
BENCHMARK(BM_AAMoves);

void BM_Differential(benchmark::State& state) {
  Signature sig = Signature::binary2d();
  ShapeEnumerator shapes(sig);
  auto basis = chainBasis(sig, 4, 1, shapes);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(differential(sig, basis[i % basis.size()]));
    ++i;
  }
}
BENCHMARK(BM_Differential);

}  // namespace
