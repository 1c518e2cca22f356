#include <benchmark/benchmark.h>

#include "hallforge/dh1.hpp"
#include "hallforge/dh2.hpp"
#include "hallforge/hall_classical.hpp"

using namespace hallforge;

namespace {

Catalog make_catalog(int bound, std::uint32_t p) {
  return Catalog(Quiver::parse("a2:>"), PrimeField(p), DimVector{bound, bound});
}

void BM_CatalogBuild(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    Catalog cat = make_catalog(bound, p);
    benchmark::DoNotOptimize(cat.size());
  }
}
BENCHMARK(BM_CatalogBuild)->Args({2, 2})->Args({4, 2})->Args({4, 3})->Args({6, 3});

void BM_SubmoduleTable(benchmark::State& state) {
  // full submodule classification of the largest class, cold each round
  const int bound = static_cast<int>(state.range(0));
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    state.PauseTiming();
    Catalog cat = make_catalog(bound, p);
    ClassId big = cat.require_id(
        IsoClass::parse("(1-1)x" + std::to_string(bound) + "+(2-2)x" + std::to_string(bound)));
    state.ResumeTiming();
    benchmark::DoNotOptimize(cat.sub_classes(big).size());
  }
}
BENCHMARK(BM_SubmoduleTable)->Args({2, 2})->Args({3, 3})->Args({4, 3});

void BM_ExtensionTable(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  const std::uint32_t p = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) {
    state.PauseTiming();
    Catalog cat = make_catalog(bound, p);
    ClassId a = cat.require_id(IsoClass::parse("(1-1)x" + std::to_string(bound / 2) +
                                               "+(1-2)x" + std::to_string(bound / 2)));
    ClassId b = cat.require_id(IsoClass::parse("(2-2)x" + std::to_string(bound / 2)));
    state.ResumeTiming();
    benchmark::DoNotOptimize(cat.ext_table(a, b).size());
  }
}
BENCHMARK(BM_ExtensionTable)->Args({2, 2})->Args({4, 3});

void BM_GreenCheck(benchmark::State& state) {
  Catalog cat = make_catalog(4, 2);
  RingelHall rh(cat);
  ClassId a = cat.require_id(IsoClass::parse("(1-2)x1+(1-1)x1"));
  ClassId b = cat.require_id(IsoClass::parse("(1-1)x1+(2-2)x2"));
  for (auto _ : state) {
    auto res = rh.green_check(a, b, b, a);
    benchmark::DoNotOptimize(res.holds);
  }
}
BENCHMARK(BM_GreenCheck);

void BM_DH2Product(benchmark::State& state) {
  // steady state: structure-constant caches warm, bilinear assembly timed
  Catalog cat = make_catalog(4, 2);
  DH2 alg(cat);
  DimVector z{0, 0};
  ClassId a0 = cat.require_id(IsoClass::parse("(1-2)x1"));
  ClassId a1 = cat.require_id(IsoClass::parse("(1-1)x1"));
  ClassId b0 = cat.require_id(IsoClass::parse("(2-2)x1"));
  DH2Element x = alg.monomial(DH2Key{z, z, a0, a1}, Coeff::one(2));
  DH2Element y = alg.monomial(DH2Key{z, z, b0, a0}, Coeff::one(2));
  benchmark::DoNotOptimize(alg.product(x, y));
  for (auto _ : state) benchmark::DoNotOptimize(alg.product(x, y));
}
BENCHMARK(BM_DH2Product);

void BM_DH1Product(benchmark::State& state) {
  Catalog cat = make_catalog(4, 3);
  DH1 alg(cat);
  DH1Element x = alg.monomial(cat.require_id(IsoClass::parse("(1-2)x1+(1-1)x1")), Coeff::one(3));
  DH1Element y = alg.monomial(cat.require_id(IsoClass::parse("(1-2)x1+(2-2)x1")), Coeff::one(3));
  benchmark::DoNotOptimize(alg.product_u(x, y));
  for (auto _ : state) benchmark::DoNotOptimize(alg.product_u(x, y));
}
BENCHMARK(BM_DH1Product);

void BM_ToTriangular(benchmark::State& state) {
  Catalog cat = make_catalog(2, 2);
  DH2 alg(cat);
  DimVector z{0, 0};
  ClassId m0 = cat.require_id(IsoClass::parse("(1-2)x1+(1-1)x1"));
  ClassId m1 = cat.require_id(IsoClass::parse("(1-2)x1+(2-2)x1"));
  DH2Element x = alg.monomial(DH2Key{z, z, m0, m1}, Coeff::one(2));
  benchmark::DoNotOptimize(alg.to_triangular(x));
  for (auto _ : state) benchmark::DoNotOptimize(alg.to_triangular(x));
}
BENCHMARK(BM_ToTriangular);

}  // namespace

BENCHMARK_MAIN();
