#include <benchmark/benchmark.h>

#include <nkland/cnf.hpp>
#include <nkland/generator.hpp>
#include <nkland/two_sat.hpp>

using namespace nkland;

static void BM_GenFixedRatio(benchmark::State &state)
{
	auto n = static_cast<std::size_t>(state.range(0));
	std::uint64_t seed = 0;
	for (auto _ : state)
		benchmark::DoNotOptimize(gen_fixed_ratio({n, 2, FixedRatioModel{2.85}, ++seed}));
	state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_GenFixedRatio)->RangeMultiplier(4)->Range(256, 4096);

static void BM_NkToCnf(benchmark::State &state)
{
	auto n = static_cast<std::size_t>(state.range(0));
	auto inst = gen_fixed_ratio({n, 2, FixedRatioModel{2.85}, 1});
	for (auto _ : state)
		benchmark::DoNotOptimize(nk_to_cnf(inst));
}
BENCHMARK(BM_NkToCnf)->RangeMultiplier(4)->Range(256, 4096);

static void BM_TwoSatExtractSolve(benchmark::State &state)
{
	auto n = static_cast<std::size_t>(state.range(0));
	auto inst = gen_fixed_ratio({n, 2, FixedRatioModel{2.95}, 1});
	for (auto _ : state)
	{
		auto cnf = extract_two_sat(inst);
		benchmark::DoNotOptimize(solve_two_sat(cnf));
	}
}
BENCHMARK(BM_TwoSatExtractSolve)->RangeMultiplier(4)->Range(256, 4096);
