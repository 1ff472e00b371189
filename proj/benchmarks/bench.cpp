#include "toricval/admissible.hpp"
#include "toricval/completion.hpp"
#include "toricval/lattice.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace toricval {
namespace {

const GammaSpec kZ = GammaSpec::discrete();

Polyhedron segment(Rat a, Rat b) { return Polyhedron::from_generators(1, {{a}, {b}}); }
Polyhedron half_line(Rat a, long dir) { return Polyhedron::from_generators(1, {{a}}, {{dir}}); }

void BM_ConvexHull3d(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coord(-20, 20);
  std::vector<RatVec> points(static_cast<std::size_t>(state.range(0)));
  for (auto& p : points) p = {coord(rng), coord(rng), coord(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(Polyhedron::from_generators(3, points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_HilbertBasis(benchmark::State& state) {
  const long k = state.range(0);
  const Polyhedron tri = Polyhedron::from_generators(2, {{0, 0}, {k, 1}, {1, k}});
  const Polyhedron sigma = cone_over(tri, kZ);
  std::size_t size = 0;
  for (auto _ : state) size = hilbert_basis(sigma, kZ).size();
  state.counters["basis"] = static_cast<double>(size);
}

void BM_SnfQuotient(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> entry(-50, 50);
  const auto d = static_cast<std::size_t>(state.range(0));
  std::vector<IntVec> basis(d / 2, IntVec(d));
  for (auto& row : basis)
    for (auto& x : row) x = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(snf_quotient(basis, d));
}

// Staircase of n unit segments under the projective line.
void BM_CompleteModelStaircase(benchmark::State& state) {
  const Complex sigma = face_closure(1, {half_line(0, 1), half_line(0, -1)});
  std::vector<Polyhedron> steps;
  for (long i = 0; i < state.range(0); ++i) steps.push_back(segment(i, i + 1));
  HalfSpaceFan delta;
  if (!assemble_delta(sigma, face_closure(1, steps), kZ, &delta).is_proved()) {
    state.SkipWithError("assembly failed");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(complete_model(delta, kZ));
}

void BM_AlgebraizeQuadrants(benchmark::State& state) {
  auto quadrant = [](RatVec a, RatVec b) { return Polyhedron::from_generators(2, {{0, 0}}, {a, b}); };
  const Complex sigma = face_closure(2, {quadrant({1, 0}, {0, 1}), quadrant({0, 1}, {-1, 0}),
                                         quadrant({-1, 0}, {0, -1}), quadrant({0, -1}, {1, 0})});
  for (auto _ : state) benchmark::DoNotOptimize(algebraize(sigma, kZ));
}

BENCHMARK(BM_ConvexHull3d)->Arg(8)->Arg(32)->Arg(128);
BENCHMARK(BM_HilbertBasis)->Arg(2)->Arg(5)->Arg(9);
BENCHMARK(BM_SnfQuotient)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_CompleteModelStaircase)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlgebraizeQuadrants)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace toricval

BENCHMARK_MAIN();
