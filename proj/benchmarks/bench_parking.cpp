#include "parkinv/closed_forms.hpp"
#include "parkinv/invariance.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace parkinv;

namespace {

LengthVector constant_vector(int n, int a)
{
    return LengthVector(std::vector<int>(static_cast<std::size_t>(n), a));
}

void BM_Park(benchmark::State& state)
{
    const LengthVector y({3, 4, 2, 1, 3});
    const std::vector<int> prefs{5, 1, 6, 2, 9};
    Occupancy occ;
    for (auto _ : state) {
        benchmark::DoNotOptimize(detail::park_raw(y.lengths(), prefs, occ));
    }
}
BENCHMARK(BM_Park);

void BM_IsInvariant(benchmark::State& state)
{
    const LengthVector y = constant_vector(static_cast<int>(state.range(0)), 2);
    std::vector<int> prefs;
    for (int i = 0; i < y.size(); ++i)
        prefs.push_back(1 + 2 * i);
    const PreferenceVector x(prefs, y);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invariance::is_invariant(y, x));
    }
}
BENCHMARK(BM_IsInvariant)->Arg(4)->Arg(5)->Arg(6);

// The point of the pruning lemmas: candidate entries shrink from [m] to the
// binary-combination set.
void BM_EnumeratePruned(benchmark::State& state)
{
    const LengthVector y = constant_vector(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(invariance::enumerate_invariant_nd(y));
    }
}
BENCHMARK(BM_EnumeratePruned)->Arg(3)->Arg(4)->Arg(5);

void BM_EnumerateExhaustive(benchmark::State& state)
{
    const LengthVector y = constant_vector(static_cast<int>(state.range(0)), 3);
    const invariance::EnumerationOptions opts{10'000'000, false};
    for (auto _ : state) {
        benchmark::DoNotOptimize(invariance::enumerate_invariant_nd(y, opts));
    }
}
BENCHMARK(BM_EnumerateExhaustive)->Arg(3)->Arg(4)->Arg(5);

// Closed form against the search it replaces.
void BM_ClosedFormGenerate(benchmark::State& state)
{
    const auto cls = closed_forms::classify(constant_vector(static_cast<int>(state.range(0)), 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(closed_forms::generate_invariant_nd_closed(*cls));
    }
}
BENCHMARK(BM_ClosedFormGenerate)->Arg(3)->Arg(4)->Arg(5);

void BM_SolutionSet(benchmark::State& state)
{
    const LengthVector y({8, 4, 2, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(invariance::invariant_solution_set(y));
    }
}
BENCHMARK(BM_SolutionSet);

}  // namespace

BENCHMARK_MAIN();
