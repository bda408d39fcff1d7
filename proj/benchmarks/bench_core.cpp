#include <benchmark/benchmark.h>

#include <random>

#include "toric/hilbert.hpp"
#include "toric/io.hpp"
#include "toric/numeric.hpp"
#include "toric/resolution.hpp"

using namespace toric;

namespace {

IntegerMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> e(-9, 9);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = e(rng);
  return m;
}

LaurentPolynomial second_application() {
  return io::polynomial_from_json(io::read_json_file(std::string(TORIC_FIXTURE_DIR) + "/app_b/h.json"));
}

}  // namespace

static void BM_HermiteNormalForm(benchmark::State& state) {
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8)->Arg(16);

static void BM_DualCone(benchmark::State& state) {
  const Cone c(3, {{2, 2, 0}, {1, 1, 1}, {0, 0, 2}, {2, 4, 0}});
  for (auto _ : state) benchmark::DoNotOptimize(dual_cone(c));
}
BENCHMARK(BM_DualCone);

static void BM_HilbertBasis(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  // Con(e_1, ..., e_{d-1}, (1, ..., 1, d+1)) has a large parallelepiped.
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i + 1 < d; ++i) gens.push_back(LatticeVector::unit(d, i));
  LatticeVector last(d);
  for (std::size_t i = 0; i + 1 < d; ++i) last[i] = 1;
  last[d - 1] = static_cast<long>(d) + 1;
  gens.push_back(last);
  for (auto _ : state) {
    const Cone c(d, gens);  // fresh cone, so the memo does not short-circuit
    benchmark::DoNotOptimize(hilbert_basis(c));
  }
}
BENCHMARK(BM_HilbertBasis)->Arg(2)->Arg(3)->Arg(4);

static void BM_ResolveSecondApplication(benchmark::State& state) {
  const auto h = second_application();
  const std::vector<ResolutionStep> script{MonomialStep{IntegerMatrix{{0, 1, 1}, {0, 1, 2}, {1, 1, 0}}, {"w1", "w2", "w3"}}};
  for (auto _ : state) benchmark::DoNotOptimize(resolve(h, script));
}
BENCHMARK(BM_ResolveSecondApplication);

static void BM_SuggestMap(benchmark::State& state) {
  const auto h = second_application();
  for (auto _ : state) benchmark::DoNotOptimize(suggest_map(h));
}
BENCHMARK(BM_SuggestMap)->Unit(benchmark::kMillisecond);

static void BM_FreeEnergyGrid(benchmark::State& state) {
  const auto h = parse_polynomial("u1^2*u2^4");
  QuadratureSpec spec = QuadratureSpec::unit_box(2);
  spec.points_per_axis = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(estimate_free_energy(h, spec));
}
BENCHMARK(BM_FreeEnergyGrid)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
