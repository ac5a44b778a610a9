#include <benchmark/benchmark.h>

#include "entanglia/bipartite.hpp"
#include "entanglia/fts.hpp"
#include "entanglia/ghzw.hpp"
#include "entanglia/lattice.hpp"
#include "entanglia/luinv.hpp"
#include "entanglia/multiqubit.hpp"
#include "entanglia/random.hpp"
#include "entanglia/roof.hpp"
#include "entanglia/scan.hpp"
#include "entanglia/twoqubit.hpp"

using namespace entanglia;

static void BM_PartialTranspose(benchmark::State& st) {
  Rng rng(1);
  const int n = static_cast<int>(st.range(0));
  DensityMatrix rho = random_density(Dims(n, 2), rng);
  for (auto _ : st) benchmark::DoNotOptimize(partial_transpose(rho, {0}));
}
BENCHMARK(BM_PartialTranspose)->DenseRange(2, 6, 2);

static void BM_PptCriterion(benchmark::State& st) {
  DensityMatrix rho = build_ghzw({0.2, 0.2});
  for (auto _ : st) benchmark::DoNotOptimize(ppt_criterion(rho, {0}));
}
BENCHMARK(BM_PptCriterion);

static void BM_Wootters(benchmark::State& st) {
  Rng rng(2);
  DensityMatrix rho = random_density({2, 2}, rng);
  for (auto _ : st) benchmark::DoNotOptimize(wootters_concurrence(rho));
}
BENCHMARK(BM_Wootters);

static void BM_GsMatrixCriteria(benchmark::State& st) {
  DensityMatrix rho = build_ghzw({0.3, 0.1});
  for (auto _ : st) benchmark::DoNotOptimize(gs_matrix_criteria(rho));
}
BENCHMARK(BM_GsMatrixCriteria);

static void BM_FtsInvariants(benchmark::State& st) {
  Rng rng(3);
  StateVector psi = random_state({2, 2, 2}, rng);
  for (auto _ : st) benchmark::DoNotOptimize(fts_invariants(psi));
}
BENCHMARK(BM_FtsInvariants);

static void BM_ConcurrenceRoof(benchmark::State& st) {
  Rng rng(4);
  DensityMatrix rho = random_density({2, 2}, rng);
  RoofOptions o;
  o.restarts = static_cast<int>(st.range(0));
  o.max_workers = 1;
  const PureFunctional f = [](const StateVector& s) { return pure_concurrence(s.amps); };
  for (auto _ : st) benchmark::DoNotOptimize(convex_roof(rho, f, o));
}
BENCHMARK(BM_ConcurrenceRoof)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_MixedInvariant(benchmark::State& st) {
  Rng rng(5);
  DensityMatrix rho = random_density({3, 3, 3}, rng);
  PermLabel l = PermLabel::parse("s,t,ts2", 3);
  for (auto _ : st) benchmark::DoNotOptimize(mixed_invariant(rho, l));
}
BENCHMARK(BM_MixedInvariant);

static void BM_NaiveMixedInvariant(benchmark::State& st) {
  Rng rng(5);
  DensityMatrix rho = random_density({3, 3, 3}, rng);
  PermTuple t = to_perm_tuple(PermLabel::parse("s,t,ts2", 3));
  for (auto _ : st) benchmark::DoNotOptimize(naive_mixed_invariant(rho, t));
}
BENCHMARK(BM_NaiveMixedInvariant)->Unit(benchmark::kMillisecond);

static void BM_ProperLabels(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(proper_labels(n));
}
BENCHMARK(BM_ProperLabels)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Scan(benchmark::State& st) {
  ScanOptions o;
  o.res = static_cast<int>(st.range(0));
  o.criteria = {"ppt", "gs", "su1", "wootters"};
  for (auto _ : st) benchmark::DoNotOptimize(scan_simplex(o));
}
BENCHMARK(BM_Scan)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
