// Serial reference against the OpenMP driver on the same campaign corpus.

#include <benchmark/benchmark.h>

#include "equicolor/campaign.hpp"

using namespace equicolor;

namespace {

CampaignSpec bench_spec() {
  CampaignSpec spec;
  spec.family = FamilySpec::triangle_free_planar();
  spec.n_min = 3;
  spec.n_max = 9;
  spec.solver = CampaignSpec::Solver::both;
  return spec;
}

const std::vector<Graph>& bench_corpus() {
  static const std::vector<Graph> corpus = build_corpus(bench_spec());
  return corpus;
}

void BM_CampaignSerial(benchmark::State& state) {
  const CampaignSpec spec = bench_spec();
  const std::vector<Graph>& corpus = bench_corpus();  // built outside the timed loop
  for (auto _ : state) {
    VerificationReport r = run_conjecture_check_serial(spec, corpus);
    benchmark::DoNotOptimize(r.counts.yes);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(bench_corpus().size()));
}
BENCHMARK(BM_CampaignSerial)->Unit(benchmark::kMillisecond);

void BM_CampaignParallel(benchmark::State& state) {
  const CampaignSpec spec = bench_spec();
  const int threads = static_cast<int>(state.range(0));
  const std::vector<Graph>& corpus = bench_corpus();
  for (auto _ : state) {
    VerificationReport r = run_conjecture_check(spec, corpus, threads);
    benchmark::DoNotOptimize(r.counts.yes);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(bench_corpus().size()));
}
BENCHMARK(BM_CampaignParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_DensitySerial(benchmark::State& state) {
  for (auto _ : state) {
    auto r = run_bound_validation_serial(FamilySpec::planar_girth(5), 3, 9);
    benchmark::DoNotOptimize(r.rows.size());
  }
}
BENCHMARK(BM_DensitySerial)->Unit(benchmark::kMillisecond);

void BM_DensityParallel(benchmark::State& state) {
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = run_bound_validation(FamilySpec::planar_girth(5), 3, 9, threads);
    benchmark::DoNotOptimize(r.rows.size());
  }
}
BENCHMARK(BM_DensityParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
