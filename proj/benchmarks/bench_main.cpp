#include <benchmark/benchmark.h>

#include "uakit/category.hpp"
#include "uakit/equivalence.hpp"
#include "uakit/harness.hpp"
#include "uakit/logic.hpp"
#include "uakit/semantics.hpp"
#include "uakit/transforms.hpp"

namespace {

using namespace uakit;

void BM_ParsePrint(benchmark::State& state) {
  const Vocabulary v({"p", "q", "r"});
  const std::string text = "K1 (p & ~A2 q) -> (L1 (r | ~K2 (p <-> q)) & A1 A2 r)";
  for (auto _ : state) {
    const Formula f = parse_formula(text, v);
    benchmark::DoNotOptimize(print_formula(f, v));
  }
}
BENCHMARK(BM_ParsePrint);

void BM_EnumerateFormulas(benchmark::State& state) {
  const int agents = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_formulas(AtomSet::first(2), agents, 2));
}
BENCHMARK(BM_EnumerateFormulas)->Arg(1)->Arg(2);

void BM_GenHms(benchmark::State& state) {
  const GenStrategy s = state.range(0) ? GenStrategy::Direct : GenStrategy::ViaTransform;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gen_hms({3, 3, 2}, seed++, s));
}
BENCHMARK(BM_GenHms)->Arg(0)->Arg(1);

void BM_HmsTransform(benchmark::State& state) {
  const FHModel k = gen_fh({static_cast<int>(state.range(0)), 4, 2}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(hms_transform(k, RestrictMode::Copy));
}
BENCHMARK(BM_HmsTransform)->DenseRange(1, 3);

void BM_PropertySuite(benchmark::State& state) {
  const HMSModel m = gen_hms({static_cast<int>(state.range(0)), 3, 2}, 7, GenStrategy::ViaTransform).model;
  state.counters["states"] = m.frame.num_states();
  for (auto _ : state) benchmark::DoNotOptimize(property_suite(m));
}
BENCHMARK(BM_PropertySuite)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CategoryEquivalence(benchmark::State& state) {
  const FHCategory c = build_category(gen_fh({2, 4, 2}, 3), RestrictMode::Quotient);
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_category_equivalence(c, depth));
}
BENCHMARK(BM_CategoryEquivalence)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Soundness(benchmark::State& state) {
  const HMSModel m = gen_hms({2, 3, 2}, 11, GenStrategy::ViaTransform).model;
  const auto pool = enumerate_formulas(AtomSet::first(2), 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(soundness_suite(m, pool, 2));
}
BENCHMARK(BM_Soundness)->Unit(benchmark::kMillisecond);

void BM_Extension(benchmark::State& state) {
  const HMSModel m = gen_hms({3, 3, 2}, 5, GenStrategy::ViaTransform).model;
  const Formula f = parse_formula("K1 (p & ~A2 q) -> L2 (r | K1 ~r)", m.frame.vocabulary());
  for (auto _ : state) benchmark::DoNotOptimize(extension(m, f));
}
BENCHMARK(BM_Extension);

}  // namespace

BENCHMARK_MAIN();
