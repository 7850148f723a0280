#include <benchmark/benchmark.h>

#include <string>

#include "qmalg/connections.hpp"
#include "qmalg/decomposition.hpp"
#include "qmalg/generator.hpp"
#include "qmalg/identities.hpp"
#include "qmalg/io.hpp"
#include "qmalg/minimality.hpp"

namespace {

qmalg::ConcreteAlgebra generated(int arity, int basis, int dim_v) {
  qmalg::GeneratorParams p;
  p.arity = arity;
  p.basis_count = basis;
  p.dim_v = dim_v;
  p.mode = dim_v ? qmalg::GeneratorMode::general_symbolic : qmalg::GeneratorMode::multiplicative;
  p.density = 0.35;
  p.seed = 7;
  return qmalg::generate_random(p);
}

qmalg::ConcreteAlgebra fixture(const std::string& name) {
  return qmalg::load_algebra(std::string(QMALG_FIXTURE_DIR) + "/" + name + ".json");
}

}  // namespace

static void BM_SymbolicOfConcrete(benchmark::State& state) {
  const auto alg = generated(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(qmalg::symbolic_of_concrete(alg));
}
BENCHMARK(BM_SymbolicOfConcrete)->Args({2, 4})->Args({2, 8})->Args({3, 4})->Args({3, 8});

static void BM_Classes(benchmark::State& state) {
  const auto sym = qmalg::symbolic_of_concrete(generated(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(qmalg::classes(sym));
}
BENCHMARK(BM_Classes)->Args({2, 4})->Args({2, 8})->Args({3, 4})->Args({3, 8});

static void BM_Decompose(benchmark::State& state) {
  const auto alg = generated(2, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(qmalg::decompose(alg));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(8);

static void BM_CheckIdentity(benchmark::State& state) {
  const auto alg = fixture(state.range(0) ? "sl2_split_double" : "sl2");
  const auto scheme = qmalg::colorize(qmalg::builtin_scheme("leibniz", 2), alg.bicharacter());
  for (auto _ : state) benchmark::DoNotOptimize(qmalg::check_identity(alg, scheme));
}
BENCHMARK(BM_CheckIdentity)->Arg(0)->Arg(1);

static void BM_MinimalBruteForce(benchmark::State& state) {
  const auto alg = generated(2, static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(qmalg::minimal_brute_force(alg));
}
BENCHMARK(BM_MinimalBruteForce)->Arg(3)->Arg(5);

static void BM_MinimalByTheorem(benchmark::State& state) {
  const auto alg = generated(2, static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(qmalg::minimal_by_theorem(alg));
}
BENCHMARK(BM_MinimalByTheorem)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
