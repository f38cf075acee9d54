#include "nkland/monte_carlo.hpp"

#include "nkland/error.hpp"
#include "nkland/generator.hpp"
#include "nkland/structure.hpp"
#include "nkland/two_sat.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <numeric>

namespace nkland {

bool McReport::within(double sigmas) const
{
	if (std_error == 0.0)
		return estimate == target;
	return std::abs(estimate - target) <= sigmas * std_error;
}

double McReport::z_score() const
{
	if (std_error == 0.0)
		return estimate == target ? 0.0 : INFINITY;
	return (estimate - target) / std_error;
}

std::string to_json(const McReport &r)
{
	nlohmann::json j = {{"check", r.name},         {"samples", r.samples},
	                    {"hits", r.hits},          {"estimate", r.estimate},
	                    {"target", r.target},      {"std_error", r.std_error},
	                    {"z_score", r.z_score()},  {"within_3_sigma", r.within()}};
	return j.dump();
}

namespace {

McReport make_report(std::string name, std::uint64_t samples,
                     std::uint64_t hits, double target)
{
	McReport r;
	r.name = std::move(name);
	r.samples = samples;
	r.hits = hits;
	r.target = target;
	auto n = static_cast<double>(samples);
	r.estimate = static_cast<double>(hits) / n;
	r.std_error = std::sqrt(target * (1.0 - target) / n);
	return r;
}

// Fills `f` with a k = 2 table holding exactly `zeros` zero rows.
void random_table(LocalFitness &f, std::size_t zeros, Rng &rng)
{
	std::array<std::size_t, 8> rows;
	std::iota(rows.begin(), rows.end(), 0);
	for (std::size_t i = 0; i < zeros; ++i)
		std::swap(rows[i], rows[i + rng.below(8 - i)]);
	f.table = TruthTable(8, true);
	for (std::size_t i = 0; i < zeros; ++i)
		f.table.set(rows[i], false);
}

// Places `main` as the main variable and the other two in random order.
void place(LocalFitness &f, Var main, Var a, Var b, Rng &rng)
{
	f.main_var = main;
	if (rng.below(2))
		std::swap(a, b);
	f.neighborhood = {a, b};
}

// h reads the shared variable 0 plus a and b.
void layout(LocalFitness &h, Var a, Var b, bool shared_is_main, Rng &rng)
{
	if (shared_is_main)
	{
		place(h, 0, a, b, rng);
		return;
	}
	if (rng.below(2))
		std::swap(a, b);
	place(h, a, 0, b, rng);
}

} // namespace

double all_zero_probability(double p, std::size_t n, std::size_t k)
{
	auto rows = static_cast<double>(std::size_t{1} << (k + 1));
	return 1.0 - std::pow(1.0 - std::pow(p, rows), static_cast<double>(n));
}

McReport mc_check_all_zero(double p, std::size_t n, std::size_t k,
                           std::uint64_t samples, std::uint64_t seed)
{
	if (samples < 10'000)
		throw InvalidParameters("all-zero check needs at least 10^4 samples");
	std::uint64_t hits = 0;
	for (std::uint64_t s = 0; s < samples; ++s)
	{
		GenParams params{n, k, UniformModel{p}, derive_seed(seed, {s})};
		hits += find_all_zero_function(gen_uniform(params)).has_value();
	}
	return make_report("all-zero", samples, hits, all_zero_probability(p, n, k));
}

McReport mc_check_conflict(std::uint64_t samples, std::uint64_t seed,
                           bool shared_variable)
{
	Rng rng(seed);
	LocalFitness f, g;
	std::uint64_t hits = 0;
	for (std::uint64_t s = 0; s < samples; ++s)
	{
		if (shared_variable)
		{
			// Variable 0 is shared; f also reads {1, 2}, g reads {3, 4}. It is
			// f's main variable, g's, or a neighbour of both.
			auto c = rng.below(3);
			layout(f, 1, 2, c == 0, rng);
			layout(g, 3, 4, c == 1, rng);
		}
		else
		{
			place(f, 0, 1, 2, rng);
			place(g, 3, 4, 5, rng);
		}
		random_table(f, 4, rng);
		random_table(g, 4, rng);
		hits += is_conflicting(f, g);
	}
	return make_report(shared_variable ? "conflict" : "conflict-disjoint",
	                   samples, hits, shared_variable ? 2.0 / 4900.0 : 0.0);
}

McReport mc_check_module_prob(double alpha, std::uint64_t samples,
                              std::uint64_t seed)
{
	if (!(alpha >= 0.0 && alpha <= 1.0))
		throw InvalidParameters("alpha must lie in [0, 1]");
	// 3-module (x | y | w), (x | y | ~w) over variables x=0, y=1, w=2.
	const Clause c1{pos(0), pos(1), pos(2)}, c2{pos(0), pos(1), neg(2)};
	Rng rng(seed);
	LocalFitness g;
	std::uint64_t hits = 0;
	for (std::uint64_t s = 0; s < samples; ++s)
	{
		auto m = static_cast<Var>(rng.below(3));
		place(g, m, (m + 1) % 3, (m + 2) % 3, rng);
		random_table(g, rng.bernoulli(alpha) ? 3 : 2, rng);
		hits += entails(g, c1) && entails(g, c2);
	}
	return make_report("module", samples, hits, module_ratio(alpha));
}

McReport mc_check_collision(std::size_t n, std::uint64_t samples,
                            std::uint64_t seed)
{
	if (n < 4)
		throw InvalidParameters("collision check needs n >= 4");
	Rng rng(seed);
	std::uint64_t hits = 0;
	for (std::uint64_t s = 0; s < samples; ++s)
	{
		auto nb = sample_neighborhood(n, 2, 0, rng);
		hits += (nb[0] == 1 && nb[1] == 2) || (nb[0] == 2 && nb[1] == 1);
	}
	auto m = static_cast<double>(n - 1);
	return make_report("collision", samples, hits, 2.0 / (m * (m - 1.0)));
}

} // namespace nkland
