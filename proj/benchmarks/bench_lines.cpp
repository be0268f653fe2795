#include <benchmark/benchmark.h>

#include "fanoline/catalog.hpp"
#include "fanoline/extension.hpp"
#include "fanoline/linescheme.hpp"

namespace {

using namespace fanoline;

void BM_AnalyzeChart(benchmark::State& state, const std::string& name) {
  const CatalogEntry e = catalog_entry(name);
  const ProjectivePoint p = rational_point(e, 1);
  for (auto _ : state) benchmark::DoNotOptimize(analyze_chart(normalize_chart(e.scheme, p)));
}
BENCHMARK_CAPTURE(BM_AnalyzeChart, segre_1_2, "segre_1_2");
BENCHMARK_CAPTURE(BM_AnalyzeChart, plucker_4, "plucker_4");
BENCHMARK_CAPTURE(BM_AnalyzeChart, veronese2_3, "veronese2_3");
BENCHMARK_CAPTURE(BM_AnalyzeChart, ci_5_2_2, "ci_5_2_2");
BENCHMARK_CAPTURE(BM_AnalyzeChart, fermat_cubic, "fermat_cubic");

void BM_ConeReport(benchmark::State& state, const std::string& name) {
  const CatalogEntry e = catalog_entry(name);
  const ProjectivePoint y = rational_point(e, 1);
  const ProjectivePoint vertex = cone_vertex(e.scheme);
  for (auto _ : state) benchmark::DoNotOptimize(criterion_report(cone_context(e.scheme, y), {}, {vertex}));
}
BENCHMARK_CAPTURE(BM_ConeReport, segre_1_2, "segre_1_2");
BENCHMARK_CAPTURE(BM_ConeReport, veronese2_2, "veronese2_2");

void BM_CatalogConstruction(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& name : catalog_names())
      if (name != "fermat_cubic") benchmark::DoNotOptimize(catalog_entry(name));
}
BENCHMARK(BM_CatalogConstruction)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
