#include "oracles.hpp"

#include <nkland/generator.hpp>
#include <nkland/instance.hpp>
#include <nkland/instance_json.hpp>
#include <nkland/error.hpp>

#include <doctest.h>

#include <algorithm>
#include <filesystem>

using namespace nkland;

namespace {

LocalFitness fn(Var main, std::vector<Var> nbrs, const char *bits)
{
	return {main, std::move(nbrs), TruthTable::from_bitstring(bits)};
}

// The worked-example function over (x, y, z) = variables (0, 1, 2).
LocalFitness table1() { return fn(0, {1, 2}, "01101001"); }

NKInstance all_tables(std::size_t n, bool value)
{
	NKInstance inst{n, 2, {}};
	for (Var i = 0; i < n; ++i)
		inst.functions.push_back(
		    {i, {static_cast<Var>((i + 1) % n), static_cast<Var>((i + 2) % n)},
		     TruthTable(8, value)});
	return inst;
}

} // namespace

TEST_CASE("truth table bitstring round trip and counts")
{
	auto t = TruthTable::from_bitstring("01101001");
	CHECK(t.size() == 8);
	CHECK(t.to_bitstring() == "01101001");
	CHECK(t.zero_count() == 4);
	CHECK(t.has_zero());
	CHECK_FALSE(t.all_zero());
	CHECK_FALSE(t[0]);
	CHECK(t[1]);

	TruthTable big(200, true);
	big.set(130, false);
	CHECK(big.zero_count() == 1);
	CHECK_FALSE(big[130]);
	CHECK(big[129]);

	CHECK_THROWS_AS(TruthTable::from_bitstring("01x"), Error);
}

TEST_CASE("row index puts the main variable in the top bit")
{
	std::vector<std::uint8_t> t{1, 0, 1};
	CHECK(row_index(t) == 5);
	CHECK(decode_row(5, 3) == t);
	for (std::size_t r = 0; r < 16; ++r)
		CHECK(row_index(decode_row(r, 4)) == r);

	LocalFitness f = fn(2, {0, 1}, "00000000");
	std::vector<std::uint8_t> a{1, 0, 1}; // x2 = 1, x0 = 1, x1 = 0
	CHECK(row_of(f, a) == 0b110);
	std::vector<std::uint8_t> short_a{1};
	CHECK_THROWS_AS(row_of(f, short_a), std::out_of_range);
}

TEST_CASE("evaluate_local on the worked-example function")
{
	auto f = table1();
	CHECK(evaluate_local(f, std::vector<std::uint8_t>{0, 0, 1}));
	CHECK_FALSE(evaluate_local(f, std::vector<std::uint8_t>{1, 1, 0}));
	auto ones = fn(0, {1, 2}, "11111111");
	for (std::size_t r = 0; r < 8; ++r)
		CHECK(evaluate_local(ones, decode_row(r, 3)));
}

TEST_CASE("evaluate on constant instances")
{
	auto ones = all_tables(6, true), zeros = all_tables(6, false);
	for (std::uint64_t bits = 0; bits < 64; ++bits)
	{
		auto a = oracle::unpack(bits, 6);
		CHECK(evaluate(ones, a) == 6);
		CHECK(is_solution(ones, a));
		CHECK(evaluate(zeros, a) == 0);
		CHECK_FALSE(is_solution(zeros, a));
	}
	std::vector<std::uint8_t> wrong(5, 0);
	CHECK_THROWS_AS(evaluate(ones, wrong), std::invalid_argument);
}

TEST_CASE("one all-zero table makes every assignment fail")
{
	auto inst = all_tables(5, true);
	inst.functions[3].table = TruthTable(8, false);
	for (std::uint64_t bits = 0; bits < 32; ++bits)
		CHECK_FALSE(is_solution(inst, oracle::unpack(bits, 5)));
}

TEST_CASE("evaluate agrees with a naive lookup on random instances")
{
	for (std::uint64_t seed = 0; seed < 30; ++seed)
	{
		auto n = 4 + seed % 9;
		auto inst = gen_uniform({n, 2, UniformModel{0.3}, seed});
		Rng rng(seed);
		for (int s = 0; s < 50; ++s)
		{
			auto a = oracle::unpack(rng.next(), n);
			REQUIRE(evaluate(inst, a) == oracle::fitness(inst, a));
		}
	}
}

TEST_CASE("is_solution agrees with exhaustive maximum check")
{
	for (std::uint64_t seed = 0; seed < 40; ++seed)
	{
		auto n = 3 + seed % 10;
		auto inst = gen_fixed_ratio({n, 2, FixedRatioModel{2.5}, seed});
		bool any = false;
		for (std::uint64_t bits = 0; bits < (1u << n); ++bits)
			any |= is_solution(inst, oracle::unpack(bits, n));
		CHECK(any == oracle::soluble(inst));
	}
}

TEST_CASE("evaluate is invariant under reordering the function list")
{
	auto inst = gen_fixed_ratio({10, 2, FixedRatioModel{2.5}, 7});
	auto shuffled = inst;
	std::reverse(shuffled.functions.begin(), shuffled.functions.end());
	std::rotate(shuffled.functions.begin(), shuffled.functions.begin() + 3,
	            shuffled.functions.end());
	for (std::uint64_t bits = 0; bits < 1024; ++bits)
	{
		auto a = oracle::unpack(bits, 10);
		REQUIRE(evaluate(inst, a) == evaluate(shuffled, a));
	}
}

TEST_CASE("validate reports each breach")
{
	auto good = gen_fixed_ratio({8, 2, FixedRatioModel{2}, 1});
	CHECK(validate(good).empty());

	auto dup = good;
	dup.functions[4].neighborhood = {1, 1};
	auto v = validate(dup);
	REQUIRE(v.size() == 1);
	CHECK(v[0].function == 4);

	auto short_table = good;
	short_table.functions[2].table = TruthTable(7, true);
	v = validate(short_table);
	REQUIRE(v.size() == 1);
	CHECK(v[0].function == 2);

	auto self = good;
	self.functions[0].neighborhood = {0, 3};
	CHECK(validate(self).size() == 1);

	auto missing = good;
	missing.functions.pop_back();
	v = validate(missing);
	REQUIRE(v.size() == 1);
	CHECK(v[0].function == Violation::npos);
}

TEST_CASE("digest separates instances and ignores nothing")
{
	auto a = gen_fixed_ratio({20, 2, FixedRatioModel{2.5}, 3});
	auto b = a;
	CHECK(digest(a) == digest(b));
	b.functions[7].table.set(0, !b.functions[7].table[0]);
	CHECK(digest(a) != digest(b));
	auto c = a;
	std::swap(c.functions[5].neighborhood[0], c.functions[5].neighborhood[1]);
	CHECK(digest(a) != digest(c));
}

TEST_CASE("instance JSON round trip")
{
	auto inst = gen_uniform({12, 3, UniformModel{0.4}, 9});
	auto back = instance_from_json(to_json(inst));
	CHECK(back == inst);

	auto path = std::filesystem::temp_directory_path() / "nkland_instance_test.json";
	save_instance(inst, path);
	CHECK(load_instance(path) == inst);
	std::filesystem::remove(path);

	CHECK_THROWS_AS(instance_from_json("{"), Error);
	CHECK_THROWS_AS(instance_from_json(R"({"n":2,"k":1})"), Error);
	CHECK_THROWS_AS(
	    instance_from_json(R"({"n":2,"k":1,"functions":[{"main":0,"nbrs":[1],"table":"01x1"}]})"),
	    Error);
	CHECK_THROWS_AS(load_instance("/nonexistent/nkland.json"), Error);
}
