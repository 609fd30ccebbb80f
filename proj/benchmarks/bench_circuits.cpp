#include <benchmark/benchmark.h>

#include "rdcirc/compile.hpp"
#include "rdcirc/model.hpp"
#include "rdcirc/rdiff.hpp"
#include "rdcirc/semantics.hpp"

using namespace rdcirc;

static void BM_CompiledEval(benchmark::State& state) {
    Term t = eval_term(static_cast<int>(state.range(0)), 2);
    CompiledCircuit c(t);
    BitVec in(c.inputs()), out;
    std::vector<std::uint8_t> scratch;
    for (int i = 0; i < in.width(); i += 3) in.set(i, true);
    for (auto _ : state) {
        c.run(in, out, scratch);
        benchmark::DoNotOptimize(out);
    }
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CompiledEval)->DenseRange(2, 5);

static void BM_Compile(benchmark::State& state) {
    Term t = eval_term(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        CompiledCircuit c(t);
        benchmark::DoNotOptimize(c.register_count());
    }
}
BENCHMARK(BM_Compile)->DenseRange(2, 5);

static void BM_Rdiff(benchmark::State& state) {
    Term t = eval_term(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) {
        Term r = rdiff(t);
        benchmark::DoNotOptimize(r.gen_count());
    }
}
BENCHMARK(BM_Rdiff)->DenseRange(2, 4);

static void BM_ToPoly(benchmark::State& state) {
    Term t = eval_term(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        PolyTuple p = to_poly(t);
        benchmark::DoNotOptimize(p.components.size());
    }
}
BENCHMARK(BM_ToPoly)->DenseRange(2, 4);

static void BM_SafeForm(benchmark::State& state) {
    Term t = eval_term(static_cast<int>(state.range(0)), 1);
    for (auto _ : state) {
        Term s = safe_form(t);
        benchmark::DoNotOptimize(s.gen_count());
    }
}
BENCHMARK(BM_SafeForm)->DenseRange(2, 4);

BENCHMARK_MAIN();
