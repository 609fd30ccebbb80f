#include <benchmark/benchmark.h>

#include "rdcirc/model.hpp"
#include "rdcirc/rng.hpp"
#include "rdcirc/train.hpp"

using namespace rdcirc;

namespace {

// Worst case for the step: a label stream that always disagrees, so every
// step pays for the reverse derivative.
void run_steps(benchmark::State& state, const ParamModel& model) {
    std::mt19937_64 rng(7);
    BitVec theta(model.params);
    BitVec x(model.inputs);
    for (int i = 0; i < model.inputs; i += 2) x.set(i, true);
    BitVec y(model.outputs);
    for (auto _ : state) {
        y.set(0, !model.forward(theta.concat(x)).get(0));
        theta = rda_step(model, theta, x, y);
        benchmark::DoNotOptimize(theta);
        x.flip(static_cast<int>(rng() % static_cast<unsigned>(model.inputs)));
    }
    state.SetItemsProcessed(state.iterations());
}

}  // namespace

static void BM_RdaStepEval(benchmark::State& state) {
    // circuit-backed reverse derivative
    ParamModel model = build_eval(static_cast<int>(state.range(0)), 2);
    run_steps(state, model);
}
BENCHMARK(BM_RdaStepEval)->DenseRange(2, 4);

static void BM_RdaStepEvalBrute(benchmark::State& state) {
    ParamModel model = build_eval(static_cast<int>(state.range(0)), 2);
    model.reverse = rdiff_brute(model.forward);
    run_steps(state, model);
}
BENCHMARK(BM_RdaStepEvalBrute)->DenseRange(2, 4);

static void BM_RdaStepPseudoLinear(benchmark::State& state) {
    ParamModel model = build_pseudo_linear(static_cast<int>(state.range(0)));
    run_steps(state, model);
}
BENCHMARK(BM_RdaStepPseudoLinear)->RangeMultiplier(4)->Range(49, 784);

BENCHMARK_MAIN();
