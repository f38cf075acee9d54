#include "nkland/generator.hpp"

#include "nkland/error.hpp"

#include <cmath>
#include <numeric>

namespace nkland {

namespace {

// Moves a uniformly chosen `count`-subset of `pool` to its front.
template <class T>
void partial_shuffle(std::vector<T> &pool, std::size_t count, Rng &rng)
{
	for (std::size_t i = 0; i < count; ++i)
	{
		auto j = i + rng.below(pool.size() - i);
		std::swap(pool[i], pool[j]);
	}
}

std::size_t row_count(std::size_t k) { return std::size_t{1} << (k + 1); }

LocalFitness draw_function(const GenParams &params, Var i, Rng &rng)
{
	LocalFitness f;
	f.main_var = i;
	f.neighborhood = sample_neighborhood(params.n, params.k, i, rng);
	return f;
}

void fill_zero_rows(TruthTable &table, std::size_t zeros, Rng &rng)
{
	std::vector<std::size_t> rows(table.size());
	std::iota(rows.begin(), rows.end(), 0);
	partial_shuffle(rows, zeros, rng);
	for (std::size_t j = 0; j < zeros; ++j)
		table.set(rows[j], false);
}

} // namespace

void check_params(const GenParams &params)
{
	if (params.k > kMaxK)
		throw InvalidParameters("k must be at most " + std::to_string(kMaxK));
	if (params.n < params.k + 1)
		throw InvalidParameters("n must be at least k + 1");
	if (auto *u = std::get_if<UniformModel>(&params.model))
	{
		if (!(u->p >= 0.0 && u->p <= 1.0))
			throw InvalidParameters("p must lie in [0, 1]");
	}
	else
	{
		auto z = std::get<FixedRatioModel>(params.model).z;
		if (!(z >= 0.0 && z <= static_cast<double>(row_count(params.k))))
			throw InvalidParameters("z must lie in [0, 2^(k+1)]");
	}
}

std::vector<Var> sample_neighborhood(std::size_t n, std::size_t k, Var exclude,
                                     Rng &rng)
{
	if (n < k + 1)
		throw InvalidParameters("n must be at least k + 1");
	std::vector<Var> pool;
	pool.reserve(n - 1);
	for (Var v = 0; v < n; ++v)
		if (v != exclude)
			pool.push_back(v);
	partial_shuffle(pool, k, rng);
	pool.resize(k);
	return pool;
}

NKInstance gen_uniform(const GenParams &params)
{
	check_params(params);
	auto p = std::get<UniformModel>(params.model).p;

	NKInstance inst{params.n, params.k, {}};
	inst.functions.reserve(params.n);
	for (Var i = 0; i < params.n; ++i)
	{
		Rng rng(derive_seed(params.seed, {i}));
		auto f = draw_function(params, i, rng);
		f.table = TruthTable(row_count(params.k), true);
		for (std::size_t r = 0; r < f.table.size(); ++r)
			if (rng.bernoulli(p))
				f.table.set(r, false);
		inst.functions.push_back(std::move(f));
	}
	return inst;
}

std::size_t fixed_ratio_low_count(std::size_t n, double z)
{
	// The tolerance keeps decimal grid values such as z = 2.7 from losing a
	// function to representation error: (1 - 0.7000000000000002) * 10 < 3.
	auto alpha = z - std::floor(z);
	return static_cast<std::size_t>(
	    std::floor((1.0 - alpha) * static_cast<double>(n) + 1e-9));
}

NKInstance gen_fixed_ratio(const GenParams &params)
{
	check_params(params);
	auto z = std::get<FixedRatioModel>(params.model).z;
	auto base = static_cast<std::size_t>(std::floor(z));
	auto n_low = fixed_ratio_low_count(params.n, z);

	// Functions [0, n_low) of the shuffled order get `base` zero rows.
	std::vector<std::size_t> order(params.n);
	std::iota(order.begin(), order.end(), 0);
	Rng split(derive_seed(params.seed, {kSplitStream}));
	partial_shuffle(order, n_low, split);
	std::vector<std::size_t> zeros(params.n, base + 1);
	for (std::size_t j = 0; j < n_low; ++j)
		zeros[order[j]] = base;

	NKInstance inst{params.n, params.k, {}};
	inst.functions.reserve(params.n);
	for (Var i = 0; i < params.n; ++i)
	{
		Rng rng(derive_seed(params.seed, {i}));
		auto f = draw_function(params, i, rng);
		f.table = TruthTable(row_count(params.k), true);
		fill_zero_rows(f.table, zeros[i], rng);
		inst.functions.push_back(std::move(f));
	}
	return inst;
}

NKInstance generate(const GenParams &params)
{
	if (std::holds_alternative<UniformModel>(params.model))
		return gen_uniform(params);
	return gen_fixed_ratio(params);
}

} // namespace nkland
