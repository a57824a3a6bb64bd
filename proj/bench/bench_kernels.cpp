#include <benchmark/benchmark.h>

#include "hovm/characters.hpp"
#include "hovm/hovm.hpp"
#include "hovm/resolutions.hpp"

using namespace hovm;

namespace {

HovmSpec sl5_spec() {
    Gcm g = parse_gcm("A4");
    return make_spec(g, make_weight(g, {1, 0, 0, -1}), {NodeSet::of({1}), NodeSet::of({0, 2})});
}

HovmSpec a6_spec() {
    Gcm g = parse_gcm("A6");
    return make_spec(g, make_weight(g, {1, 0, 2, 0, 1, 0}),
                     {NodeSet::of({0, 2}), NodeSet::of({1, 4}), NodeSet::of({3, 5}), NodeSet::of({2, 4})});
}

void weight_set_kernel(benchmark::State& st, Exec ex, HovmSpec (*make)(), int cutoff) {
    HovmSpec spec = make();
    for (auto _ : st) benchmark::DoNotOptimize(weight_set(spec, cutoff, ex));
}

void pvm_char_kernel(benchmark::State& st, Exec ex, int cutoff) {
    Gcm g = parse_gcm("A3");
    HighestWeight lambda = make_weight(g, {1, 1, 1});
    parabolic_verma_char(g, lambda, NodeSet::of({0, 2}), cutoff, Exec::serial);  // warm the partition memo
    for (auto _ : st) benchmark::DoNotOptimize(parabolic_verma_char(g, lambda, NodeSet::of({0, 2}), cutoff, ex));
}

}  // namespace

BENCHMARK_CAPTURE(weight_set_kernel, sl5_serial, Exec::serial, sl5_spec, 14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(weight_set_kernel, sl5_parallel, Exec::parallel, sl5_spec, 14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(weight_set_kernel, a6_serial, Exec::serial, a6_spec, 10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(weight_set_kernel, a6_parallel, Exec::parallel, a6_spec, 10)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pvm_char_kernel, a3_serial, Exec::serial, 14)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(pvm_char_kernel, a3_parallel, Exec::parallel, 14)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
