#include <benchmark/benchmark.h>

#include "fanoline/catalog.hpp"
#include "fanoline/groebner.hpp"

namespace {

using namespace fanoline;

std::vector<Polynomial> twisted_cubic() {
  RingPtr x = Ring::indexed("x", 4);
  return {parse_polynomial("x0*x2 - x1^2", x), parse_polynomial("x1*x3 - x2^2", x),
          parse_polynomial("x0*x3 - x1*x2", x)};
}

void BM_BuchbergerTwistedCubic(benchmark::State& state) {
  const auto gens = twisted_cubic();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::grevlex()));
}
BENCHMARK(BM_BuchbergerTwistedCubic);

void BM_BuchbergerCatalog(benchmark::State& state, const std::string& name, MonomialOrder ord) {
  const CatalogEntry e = catalog_entry(name);
  const auto& gens = e.scheme.ideal().generators();
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, ord));
}
BENCHMARK_CAPTURE(BM_BuchbergerCatalog, plucker_4_grevlex, "plucker_4", MonomialOrder::grevlex());
BENCHMARK_CAPTURE(BM_BuchbergerCatalog, plucker_4_lex, "plucker_4", MonomialOrder::lex());
BENCHMARK_CAPTURE(BM_BuchbergerCatalog, veronese2_3_grevlex, "veronese2_3", MonomialOrder::grevlex());
BENCHMARK_CAPTURE(BM_BuchbergerCatalog, segre_2_2_lex, "segre_2_2", MonomialOrder::lex());

void BM_HilbertData(benchmark::State& state, const std::string& name) {
  const CatalogEntry e = catalog_entry(name);
  const auto& gens = e.scheme.ideal().generators();
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_data(Ideal(e.scheme.ideal().ring(), gens)));
}
BENCHMARK_CAPTURE(BM_HilbertData, segre_1_3, "segre_1_3");
BENCHMARK_CAPTURE(BM_HilbertData, veronese2_3, "veronese2_3");

void BM_SaturateIrrelevant(benchmark::State& state) {
  RingPtr x = Ring::indexed("x", 4);
  Ideal I(x, {parse_polynomial("x0*x2 - x1^2", x), parse_polynomial("x1*x3", x), parse_polynomial("x2^2*x3", x),
              parse_polynomial("x0^3", x)});
  for (auto _ : state) benchmark::DoNotOptimize(saturate_irrelevant(Ideal(x, I.generators())));
}
BENCHMARK(BM_SaturateIrrelevant);

void BM_Intersect(benchmark::State& state) {
  RingPtr x = Ring::indexed("x", 4);
  Ideal a(x, {parse_polynomial("x0", x), parse_polynomial("x1", x)});
  Ideal b(x, {parse_polynomial("x2", x), parse_polynomial("x3", x)});
  for (auto _ : state) benchmark::DoNotOptimize(ideal_intersect(Ideal(x, a.generators()), Ideal(x, b.generators())));
}
BENCHMARK(BM_Intersect);

}  // namespace
