#include <benchmark/benchmark.h>

#include <cmath>

#include "jointdc/analysis.hpp"
#include "jointdc/codec.hpp"
#include "jointdc/exponents.hpp"
#include "jointdc/random.hpp"
#include "jointdc/region.hpp"

using namespace jointdc;

namespace {

const Pmf kP0({0.5, 0.5});
const Pmf kP1({0.25, 0.75});

RuleSpec hat_rule() {
    RuleSpec r;
    r.kind = RuleKind::Hat;
    r.theta = 1.0;
    r.alpha = 0.6;
    r.beta = 0.5;
    return r;
}

RuleContext known_ctx() {
    RuleContext ctx;
    ctx.p0 = kP0;
    ctx.p1 = kP1;
    return ctx;
}

void BM_MaterializeRegion(benchmark::State& state) {
    RuleSpec rule = hat_rule();
    RuleContext ctx = known_ctx();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(materialize_region(rule, ctx, n, 2));
}
BENCHMARK(BM_MaterializeRegion)->Arg(100)->Arg(400)->Arg(800);

void BM_ExactRegionProb(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Region reg = materialize_region(hat_rule(), known_ctx(), n, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_region_prob(reg, kP0));
}
BENCHMARK(BM_ExactRegionProb)->Arg(100)->Arg(800);

void BM_ExponentFa(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(exponent_e_fa(kP0, kP1, 1.0, 0.6, 0.5));
}
BENCHMARK(BM_ExponentFa);

void BM_ExponentEc(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(exponent_e_c(kP0, kP1, 1.0, 0.6, 0.5));
}
BENCHMARK(BM_ExponentEc);

void BM_PlanParameters(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(plan_parameters(0.08, 0.002, 1.0, kP0, kP1));
}
BENCHMARK(BM_PlanParameters);

void BM_TwoPartRoundTrip(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    SplitMix64 rng(5);
    std::vector<int> x = sample_sequence(kP1, n, rng);
    for (auto _ : state) {
        Bitstring bits = two_part_encode(x, 2);
        benchmark::DoNotOptimize(two_part_decode(bits, n, 2));
    }
}
BENCHMARK(BM_TwoPartRoundTrip)->Arg(16)->Arg(64)->Arg(256);

void BM_MonteCarlo(benchmark::State& state) {
    RuleSpec rule = hat_rule();
    RuleContext ctx = known_ctx();
    for (auto _ : state)
        benchmark::DoNotOptimize(monte_carlo_region_prob(
            rule, ctx, SampleSource::P0, 20, 10000, 1));
}
BENCHMARK(BM_MonteCarlo);

void BM_GridOracleTernary(benchmark::State& state) {
    Pmf p({0.2, 0.3, 0.5});
    LinearConstraint lc{{std::log(0.2), std::log(0.3), std::log(0.5)}, -1.2};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            simplex_grid_oracle(p, {lc}, OracleObjective::KlMin, 300));
}
BENCHMARK(BM_GridOracleTernary);

}  // namespace

BENCHMARK_MAIN();
