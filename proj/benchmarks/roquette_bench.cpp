#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "roquette/character.hpp"
#include "roquette/jacobian.hpp"

using namespace roquette;

static void BM_FieldMul(benchmark::State& state) {
  const Field& f = Field::get(5, static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> pick(1, f.order() - 1);
  auto a = f.element_at(pick(rng));
  const auto b = f.element_at(pick(rng));
  for (auto _ : state) {
    a *= b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(4)->Arg(12);

static void BM_GroupEnumeration(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    RoquetteGroup g(p);
    benchmark::DoNotOptimize(g.elements().size());
  }
}
BENCHMARK(BM_GroupEnumeration)->Arg(5)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_ConjugacyClasses(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    RoquetteGroup g(p);
    benchmark::DoNotOptimize(g.conjugacy_classes()->count());
  }
}
BENCHMARK(BM_ConjugacyClasses)->Arg(5)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

static void BM_CantorAdd(benchmark::State& state) {
  const auto group = std::make_shared<const RoquetteGroup>(static_cast<std::uint32_t>(state.range(0)));
  const Jacobian j(group, Field::get(group->prime(), static_cast<int>(state.range(1))));
  std::mt19937_64 rng(2);
  auto a = j.random_divisor(rng);
  const auto b = j.random_divisor(rng);
  for (auto _ : state) {
    a = j.add(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_CantorAdd)->Args({5, 4})->Args({5, 12})->Args({7, 2});

static void BM_LefschetzCharacter(benchmark::State& state) {
  const auto group = std::make_shared<const RoquetteGroup>(static_cast<std::uint32_t>(state.range(0)));
  const RoquetteCurve curve(group);
  for (auto _ : state) benchmark::DoNotOptimize(lefschetz_character(curve).size());
}
BENCHMARK(BM_LefschetzCharacter)->Arg(5)->Arg(7)->Arg(13)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
