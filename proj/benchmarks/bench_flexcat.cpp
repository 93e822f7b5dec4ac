#include <benchmark/benchmark.h>

#include "flexcat/conjecture.hpp"
#include "flexcat/majorize.hpp"
#include "flexcat/reference_instances.hpp"
#include "flexcat/search.hpp"
#include "flexcat/thermo.hpp"

using namespace flexcat;
namespace ref = flexcat::reference;

namespace {

const SchmidtVec kX = SchmidtVec::from(ref::kSloccX);
const SchmidtVec kY = SchmidtVec::from(ref::kSloccY);

void BM_vidal(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(vidal_probability(kX, kY));
}
BENCHMARK(BM_vidal);

void BM_majorization_of_tensors(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const SchmidtVec a = sort_desc(sample_dirichlet(rng, d));
    const SchmidtVec b = sort_desc(sample_dirichlet(rng, d));
    const SchmidtVec c = sort_desc(sample_dirichlet(rng, d));
    for (auto _ : state) benchmark::DoNotOptimize(standard_catalysis_ok(a, b, c));
}
BENCHMARK(BM_majorization_of_tensors)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_thermo_dominance(benchmark::State &state) {
    const ProbVec p = make_prob_vec(ref::kThermoP);
    const ProbVec q = make_prob_vec(ref::kThermoQ);
    const GibbsVec gs = gibbs_vector(ref::kThermoLevelsS, 1.0);
    const GibbsVec gc = gibbs_vector(ref::kThermoLevelsC, 1.0);
    const ThermoCycle cycle({make_prob_vec(ref::kThermoC1), make_prob_vec(ref::kThermoC2)});
    for (auto _ : state) benchmark::DoNotOptimize(thermo_flexible_ok(p, q, gs, cycle, gc));
}
BENCHMARK(BM_thermo_dominance);

void BM_pflex_scan(benchmark::State &state) {
    const GridSpec spec = GridSpec::square(0.0, 0.5, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(scan_pflex_landscape(kX, kY, spec));
}
BENCHMARK(BM_pflex_scan)->Arg(51)->Arg(201)->Unit(benchmark::kMillisecond);

void BM_best_flexible(benchmark::State &state) {
    for (auto _ : state) benchmark::DoNotOptimize(best_flexible(kX, kY));
}
BENCHMARK(BM_best_flexible)->Unit(benchmark::kMillisecond);

void BM_conjecture_trials(benchmark::State &state) {
    ConjectureOptions opt;
    opt.trials = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(conjecture_search(opt));
}
BENCHMARK(BM_conjecture_trials)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
