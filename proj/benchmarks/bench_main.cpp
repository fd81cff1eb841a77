#include <benchmark/benchmark.h>

#include <random>

#include "newtonleaf/adlv.hpp"
#include "newtonleaf/affine_weyl.hpp"
#include "newtonleaf/display.hpp"
#include "newtonleaf/io.hpp"
#include "newtonleaf/linalg.hpp"
#include "newtonleaf/newton.hpp"
#include "newtonleaf/witt.hpp"

using namespace newtonleaf;

static void BM_LeafReportGL4(benchmark::State& state) {
  auto d = datum_from_name("GL4");
  auto sample = elements_up_to_length(d, 2, {});
  for (auto _ : state)
    for (const auto& x : sample) benchmark::DoNotOptimize(leaf_report(x));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(sample.size()));
}
BENCHMARK(BM_LeafReportGL4);

static void BM_Length(benchmark::State& state) {
  auto d = datum_from_name("GSp4");
  auto sample = elements_up_to_length(d, 3, {});
  for (auto _ : state)
    for (const auto& x : sample) benchmark::DoNotOptimize(length(x));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(sample.size()));
}
BENCHMARK(BM_Length);

// Uncached: a fresh datum each round so the Bruhat memo starts empty.
static void BM_AdmissibleGL3(benchmark::State& state) {
  const IntVector mu = to_integers({state.range(0), 0, -state.range(1)});
  for (auto _ : state) {
    auto d = build_classical(GroupFamily::GL, 3);
    benchmark::DoNotOptimize(admissible_set(d, mu, Level::Iwahori));
  }
}
BENCHMARK(BM_AdmissibleGL3)->Args({1, 0})->Args({1, 1})->Args({2, 1})->Unit(benchmark::kMillisecond);

static void BM_SigmaClassesGL3(benchmark::State& state) {
  ClassEnumerationConfig cfg;
  cfg.length_cap = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto d = build_classical(GroupFamily::GL, 3);
    benchmark::DoNotOptimize(enumerate_sigma_classes(d, cfg, FrobeniusAction::trivial(d)));
  }
}
BENCHMARK(BM_SigmaClassesGL3)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_CharpolySlopes(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  RatMatrix m(n, n);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  for (std::size_t i = 0; i < n; ++i) m(i, i) += 20;
  RationalIsocrystal iso{m, Integer(3)};
  for (auto _ : state) benchmark::DoNotOptimize(slopes_charpoly(iso));
}
BENCHMARK(BM_CharpolySlopes)->Arg(4)->Arg(8)->Arg(12);

static void BM_SlopeDivisibility(benchmark::State& state) {
  RationalIsocrystal iso{RatMatrix{{2, 1, 0}, {0, 1, 3}, {1, 0, 4}}, Integer(2)};
  for (auto _ : state) benchmark::DoNotOptimize(is_completely_slope_divisible(iso));
}
BENCHMARK(BM_SlopeDivisibility);

static void BM_LatticeEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Integer p = state.range(1);
  const int depth = static_cast<int>(state.range(2));
  std::size_t count = 0;
  for (auto _ : state) count = enumerate_lattices(n, p, depth).size();
  state.counters["lattices"] = static_cast<double>(count);
}
BENCHMARK(BM_LatticeEnumeration)->Args({2, 2, 1})->Args({2, 3, 2})->Args({3, 2, 1})->Unit(benchmark::kMillisecond);

static void BM_AdlvBasic(benchmark::State& state) {
  MonomialIsocrystal b;
  b.permutation = {1, 0};
  b.exponents = to_integers({1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(adlv_points(b, to_integers({1, 0}), state.range(0), 2));
}
BENCHMARK(BM_AdlvBasic)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_WittMultiply(benchmark::State& state) {
  const Integer p = state.range(0);
  auto ring = std::make_shared<const CoefficientRing>(p, 5);
  std::mt19937_64 rng(2);
  auto a = WittVector::random(ring, 3, rng), b = WittVector::random(ring, 3, rng);
  witt_polynomials(p, 3);
  for (auto _ : state) benchmark::DoNotOptimize(witt_mul(a, b));
}
BENCHMARK(BM_WittMultiply)->Arg(2)->Arg(3)->Arg(5);

static void BM_DisplayCheck(benchmark::State& state) {
  MonomialIsocrystal b;
  b.permutation = {1, 2, 3, 0};
  b.exponents = to_integers({-1, 0, -1, 0});
  for (auto _ : state) benchmark::DoNotOptimize(display_check(display_from_element(b, Integer(3))));
}
BENCHMARK(BM_DisplayCheck);
BENCHMARK_MAIN();
