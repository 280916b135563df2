// Serial reference kernels against the OpenMP ones on H(4,4) (256 points).

#include "bmh/gram.hpp"

#include <benchmark/benchmark.h>

using namespace bmh;

namespace {

const SchemeInstance& instance() {
    static const SchemeInstance h = hamming_instance(4);
    return h;
}

// w_k = i^k is Hadamard on H(4,2) only; the Gram sums cost the same either way
WNumeric weights(unsigned bits) {
    const BigComplex alpha = complex_roots_of_monic_quadratic(Rational(0), Rational(1), bits).first;
    WNumeric w;
    w[0] = BigComplex::from_rational(1, bits);
    for (int k = 1; k < kRelations; ++k) w[k] = w[k - 1] * alpha;
    return w;
}

void BM_dense_verify(benchmark::State& state) {
    const auto ex = state.range(0) ? Execution::parallel : Execution::serial;
    const unsigned bits = static_cast<unsigned>(state.range(1));
    const WNumeric w = weights(bits);
    const BigFloat tol(1, bits);
    for (auto _ : state) benchmark::DoNotOptimize(dense_verify(instance(), w, tol, ex));
    state.SetLabel(ex == Execution::parallel ? "parallel" : "serial");
}

void BM_validate_instance(benchmark::State& state) {
    const ConcreteTensor t = tensor_from_instance(instance());
    ValidateOptions opts;
    opts.exhaustive = true;
    opts.execution = state.range(0) ? Execution::parallel : Execution::serial;
    for (auto _ : state) benchmark::DoNotOptimize(validate_instance(instance(), t, opts));
    state.SetLabel(state.range(0) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_dense_verify)->ArgsProduct({{0, 1}, {128, 256}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_validate_instance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
