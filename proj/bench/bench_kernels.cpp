// Serial reference vs OpenMP kernels on the same inputs.
#include <benchmark/benchmark.h>

#include "intcay/oracle.hpp"
#include "intcay/sampling.hpp"
#include "intcay/spectra.hpp"

using namespace intcay;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) ? Execution::Parallel : Execution::Serial; }

GMultiset sample(const GroupSpec& spec, int max_mult) {
    sampling::Rng rng(7);
    return sampling::random_inverse_closed(spec, rng, max_mult);
}

void BM_CharPoly(benchmark::State& state) {
    const GroupSpec spec = GroupSpec::parse("Q8xZ5");
    const IntMatrix adj = adjacency_matrix(spec, sample(spec, 3));
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(adj, mode(state)));
}

void BM_MatrixProduct(benchmark::State& state) {
    const GroupSpec spec = GroupSpec::parse("Q8xZ3xZ5");
    const IntMatrix adj = adjacency_matrix(spec, sample(spec, 3));
    for (auto _ : state) benchmark::DoNotOptimize(multiply(adj, adj, mode(state)));
}

void BM_AbelianSpectrum(benchmark::State& state) {
    const GroupSpec spec = GroupSpec::parse("Z6xZ6xZ10");
    const GMultiset s = sample(spec, 3);
    for (auto _ : state) benchmark::DoNotOptimize(abelian_spectrum(spec, s, mode(state)));
}

void BM_HamiltonianSpectrum(benchmark::State& state) {
    const GroupSpec spec = GroupSpec::parse("Q8xZ5xZ5");
    const GMultiset s = sample(spec, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_spectrum(spec, s, mode(state)));
}

}  // namespace

BENCHMARK(BM_CharPoly)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MatrixProduct)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AbelianSpectrum)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HamiltonianSpectrum)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
