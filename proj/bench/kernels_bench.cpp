#include <benchmark/benchmark.h>

#include "popov/kernels.hpp"
#include "popov/verify.hpp"

using namespace popov;

namespace {

const PairAnalysis& fixture() {
    static const PairAnalysis an(prepare_pair(2, 11, 7));
    return an;
}

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_HilbertProfile(benchmark::State& state) {
    const PairAnalysis& an = fixture();
    const auto box = weight_box(an.lat, 2 * an.lat.qp);
    const CompiledIdeal& ideal = an.ideal(Family::J0, 1);
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_profile(ideal.system, an.lat, box, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<long long>(box.size()));
}

void BM_MembershipScan(benchmark::State& state) {
    const PairAnalysis& an = fixture();
    const CompiledIdeal& ideal = an.ideal(Family::J0, 1);
    const i64 c_bound = an.lat.m * (an.lat.P.back() + 2);
    for (auto _ : state) benchmark::DoNotOptimize(membership_scan(ideal, an.lat, c_bound, exec_of(state)));
}

void BM_MinAdditivityScan(benchmark::State& state) {
    const PairAnalysis& an = fixture();
    for (auto _ : state) benchmark::DoNotOptimize(min_additivity_scan(an.lat, an.lat.qp, 2 * an.lat.m, exec_of(state)));
}

}  // namespace

// Argument 0 is the serial reference path, 1 the OpenMP path.
BENCHMARK(BM_HilbertProfile)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MembershipScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MinAdditivityScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
