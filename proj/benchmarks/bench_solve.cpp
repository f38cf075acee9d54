#include <benchmark/benchmark.h>

#include <nkland/cnf.hpp>
#include <nkland/generator.hpp>
#include <nkland/solver.hpp>

using namespace nkland;

// Args: n, 100 * z. A fresh instance per iteration keeps one lucky seed from
// dominating; generation time is excluded.
static void BM_DpllNk(benchmark::State &state)
{
	auto n = static_cast<std::size_t>(state.range(0));
	double z = static_cast<double>(state.range(1)) / 100.0;
	std::uint64_t seed = 0, sat = 0;
	for (auto _ : state)
	{
		state.PauseTiming();
		auto cnf = nk_to_cnf(gen_fixed_ratio({n, 2, FixedRatioModel{z}, ++seed}));
		state.ResumeTiming();
		sat += dpll(cnf).verdict == Verdict::sat;
	}
	state.counters["sat_frac"] =
		static_cast<double>(sat) / static_cast<double>(state.iterations());
}
BENCHMARK(BM_DpllNk)
	->ArgsProduct({{512, 2048}, {275, 285, 295}})
	->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
