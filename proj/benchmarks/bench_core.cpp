#include "tobl/behavior.hpp"
#include "tobl/hardy.hpp"
#include "tobl/membership.hpp"
#include "tobl/optimizer.hpp"
#include "tobl/reference_tables.hpp"
#include "tobl/wirings.hpp"

#include <benchmark/benchmark.h>

using namespace tobl;

namespace {

void bm_validate(benchmark::State& state)
{
    const Behavior& ref = reference_behavior();
    for (auto _ : state)
        benchmark::DoNotOptimize(validate(ref));
}
BENCHMARK(bm_validate);

void bm_membership_local(benchmark::State& state)
{
    const Behavior& ref = reference_behavior();
    for (auto _ : state)
        benchmark::DoNotOptimize(membership_local(ref));
}
BENCHMARK(bm_membership_local);

void bm_membership_tobl(benchmark::State& state)
{
    const Behavior& ref = reference_behavior();
    for (auto _ : state)
        benchmark::DoNotOptimize(membership_tobl(ref, 1));
}
BENCHMARK(bm_membership_tobl)->Unit(benchmark::kMillisecond);

void bm_maximize_no_signaling(benchmark::State& state)
{
    HardySpec spec = HardySpec::canonical(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(maximize_hardy({CorrelationSet::NoSignaling, spec}));
}
BENCHMARK(bm_maximize_no_signaling)->Unit(benchmark::kMillisecond);

void bm_maximize_local(benchmark::State& state)
{
    HardySpec spec = HardySpec::canonical(3);
    for (auto _ : state)
        benchmark::DoNotOptimize(maximize_hardy({CorrelationSet::Local, spec}));
}
BENCHMARK(bm_maximize_local)->Unit(benchmark::kMillisecond);

void bm_apply_wiring(benchmark::State& state)
{
    const Behavior& ref = reference_behavior();
    Wiring w = Wiring::decode(PartyPair::BC, 0x1234);
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_wiring(ref, w));
}
BENCHMARK(bm_apply_wiring);

void bm_chsh(benchmark::State& state)
{
    Behavior wired = apply_wiring(reference_behavior(), Wiring::decode(PartyPair::BC, 0x1234));
    for (auto _ : state)
        benchmark::DoNotOptimize(chsh_value(wired));
}
BENCHMARK(bm_chsh);

void bm_audit_one_pair(benchmark::State& state)
{
    const Behavior& ref = reference_behavior();
    for (auto _ : state)
        benchmark::DoNotOptimize(audit_wirings(ref, {PartyPair::AB}, 1));
}
BENCHMARK(bm_audit_one_pair)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
