#include <nkland/error.hpp>
#include <nkland/generator.hpp>

#include <doctest.h>

#include <cmath>
#include <map>
#include <set>

using namespace nkland;

TEST_CASE("neighbourhood sampling edge cases")
{
	Rng rng(1);
	auto forced = sample_neighborhood(3, 2, 0, rng);
	CHECK(std::set<Var>(forced.begin(), forced.end()) == std::set<Var>{1, 2});
	CHECK(sample_neighborhood(5, 0, 2, rng).empty());
	CHECK_THROWS_AS(sample_neighborhood(2, 2, 0, rng), InvalidParameters);

	for (int i = 0; i < 1000; ++i)
	{
		auto nb = sample_neighborhood(7, 3, 4, rng);
		std::set<Var> s(nb.begin(), nb.end());
		REQUIRE(s.size() == 3);
		REQUIRE_FALSE(s.count(4));
		REQUIRE(*s.rbegin() < 7);
	}
}

TEST_CASE("neighbourhood pairs are uniform")
{
	// n = 10, k = 2, excluding variable 0: 36 unordered pairs.
	constexpr int draws = 100'000;
	Rng rng(2024);
	std::map<std::pair<Var, Var>, int> counts;
	for (int i = 0; i < draws; ++i)
	{
		auto nb = sample_neighborhood(10, 2, 0, rng);
		counts[{std::min(nb[0], nb[1]), std::max(nb[0], nb[1])}]++;
	}
	REQUIRE(counts.size() == 36);
	double p = 1.0 / 36, expected = draws * p;
	double sigma = std::sqrt(draws * p * (1 - p));
	double chi2 = 0;
	for (const auto &[pair, c] : counts)
	{
		CHECK(std::abs(c - expected) <= 3 * sigma);
		chi2 += (c - expected) * (c - expected) / expected;
	}
	// 35 degrees of freedom; 66.62 is the 0.999 quantile.
	CHECK(chi2 < 66.62);
}

TEST_CASE("uniform model extremes and zero rate")
{
	auto none = gen_uniform({20, 2, UniformModel{0.0}, 5});
	for (const auto &f : none.functions)
		CHECK(f.table.zero_count() == 0);
	auto all = gen_uniform({20, 2, UniformModel{1.0}, 5});
	for (const auto &f : all.functions)
		CHECK(f.table.all_zero());

	auto half = gen_uniform({12'500, 2, UniformModel{0.5}, 11});
	std::size_t zeros = 0;
	for (const auto &f : half.functions)
		zeros += f.table.zero_count();
	double entries = 100'000, frac = zeros / entries;
	CHECK(std::abs(frac - 0.5) <= 3 * std::sqrt(0.25 / entries));
}

TEST_CASE("fixed ratio model zero counts")
{
	auto zero = gen_fixed_ratio({30, 2, FixedRatioModel{0}, 1});
	for (const auto &f : zero.functions)
		CHECK(f.table.zero_count() == 0);

	auto full = gen_fixed_ratio({30, 2, FixedRatioModel{8}, 1});
	for (const auto &f : full.functions)
		CHECK(f.table.all_zero());

	auto split = gen_fixed_ratio({100, 2, FixedRatioModel{2.5}, 1});
	std::map<std::size_t, int> by_count;
	for (const auto &f : split.functions)
		by_count[f.table.zero_count()]++;
	CHECK(by_count == std::map<std::size_t, int>{{2, 50}, {3, 50}});

	CHECK(fixed_ratio_low_count(100, 2.5) == 50);
	CHECK(fixed_ratio_low_count(10, 2.7) == 3);
	CHECK(fixed_ratio_low_count(2048, 2.71) == 593);
	CHECK(fixed_ratio_low_count(7, 3.0) == 7);

	auto k3 = gen_fixed_ratio({40, 3, FixedRatioModel{5.25}, 4});
	std::size_t fives = 0;
	for (const auto &f : k3.functions)
	{
		CHECK(f.table.size() == 16);
		fives += f.table.zero_count() == 5;
	}
	CHECK(fives == 30);
}

TEST_CASE("fixed ratio zero rows are spread over all rows")
{
	std::array<int, 8> hits{};
	auto inst = gen_fixed_ratio({20'000, 2, FixedRatioModel{2}, 77});
	for (const auto &f : inst.functions)
		for (std::size_t r = 0; r < 8; ++r)
			hits[r] += !f.table[r];
	// Each row is a zero with probability 2/8.
	double n = 20'000, p = 0.25, sigma = std::sqrt(n * p * (1 - p));
	for (auto h : hits)
		CHECK(std::abs(h - n * p) <= 3 * sigma);
}

TEST_CASE("generation is deterministic per seed and valid")
{
	GenParams a{200, 2, FixedRatioModel{2.83}, 99};
	CHECK(generate(a) == generate(a));
	auto b = a;
	b.seed = 100;
	CHECK_FALSE(generate(a) == generate(b));
	CHECK(validate(generate(a)).empty());
	CHECK(validate(generate({50, 4, UniformModel{0.2}, 3})).empty());
}

TEST_CASE("parameter domain checks")
{
	CHECK_THROWS_AS(generate({10, 2, UniformModel{1.5}, 0}), InvalidParameters);
	CHECK_THROWS_AS(generate({10, 2, UniformModel{-0.1}, 0}), InvalidParameters);
	CHECK_THROWS_AS(generate({10, 2, FixedRatioModel{8.5}, 0}), InvalidParameters);
	CHECK_THROWS_AS(generate({2, 2, FixedRatioModel{1}, 0}), InvalidParameters);
	CHECK_THROWS_AS(generate({100, kMaxK + 1, FixedRatioModel{1}, 0}), InvalidParameters);
	CHECK_THROWS_AS(generate({10, 2, UniformModel{std::nan("")}, 0}), InvalidParameters);
}

TEST_CASE("rng draws are in range and seeds derive apart")
{
	Rng rng(3);
	for (int i = 0; i < 10'000; ++i)
	{
		REQUIRE(rng.below(7) < 7);
		auto u = rng.unit();
		REQUIRE(u >= 0.0);
		REQUIRE(u < 1.0);
	}
	CHECK_FALSE(rng.bernoulli(0.0));
	CHECK(rng.bernoulli(1.0));
	CHECK(derive_seed(1, {2}) != derive_seed(1, {3}));
	CHECK(derive_seed(1, {2, 3}) != derive_seed(1, {3, 2}));
	static_assert(derive_seed(5, {1}) == derive_seed(5, {1}));
}
