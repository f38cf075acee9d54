#include "oracles.hpp"

#include <nkland/error.hpp>
#include <nkland/generator.hpp>
#include <nkland/solver.hpp>
#include <nkland/structure.hpp>

#include <doctest.h>

#include <set>

using namespace nkland;

namespace {

NKInstance ring(std::size_t n, const char *bits = "11111111")
{
	NKInstance inst{n, 2, {}};
	for (Var i = 0; i < n; ++i)
		inst.functions.push_back({i,
		                          {static_cast<Var>((i + 1) % n), static_cast<Var>((i + 2) % n)},
		                          TruthTable::from_bitstring(bits)});
	return inst;
}

// f over (a, b, c) whose zero rows are exactly the rows where the variable
// at `slot` equals `value`.
LocalFitness zero_where(Var a, Var b, Var c, std::size_t slot, int value)
{
	LocalFitness f{a, {b, c}, TruthTable(8, true)};
	for (std::size_t r = 0; r < 8; ++r)
		if (((r >> (2 - slot)) & 1u) == static_cast<unsigned>(value))
			f.table.set(r, false);
	return f;
}

} // namespace

TEST_CASE("all-zero scan")
{
	auto inst = ring(6);
	CHECK_FALSE(find_all_zero_function(inst));
	inst.functions[3].table = TruthTable(8, false);
	CHECK(find_all_zero_function(inst) == 3u);

	CHECK(find_all_zero_function(gen_uniform({10, 2, UniformModel{1.0}, 1})).has_value());
	CHECK_FALSE(find_all_zero_function(gen_fixed_ratio({500, 2, FixedRatioModel{6.9}, 1})));
}

TEST_CASE("connection graph edges")
{
	CHECK(build_connection_graph(ring(8)).edge_count() == 0);

	NKInstance inst{10, 2, {}};
	for (Var i = 0; i < 10; ++i)
		inst.functions.push_back({i, {static_cast<Var>((i + 3) % 10), static_cast<Var>((i + 4) % 10)}, TruthTable(8, true)});
	inst.functions[0] = {0, {5, 7}, TruthTable::from_bitstring("01111111")};
	inst.functions[1] = {1, {5, 9}, TruthTable::from_bitstring("11110111")};
	auto g = build_connection_graph(inst);
	CHECK(g.has_edge(0, 1));
	CHECK(g.has_edge(1, 0));
	CHECK(g.edge_count() == 1);

	inst.functions[1].table = TruthTable(8, true);
	CHECK_FALSE(build_connection_graph(inst).has_edge(0, 1));
}

TEST_CASE("components of simple graphs")
{
	auto d = components(ring(7), build_connection_graph(ring(7)));
	CHECK(d.stats.count == 7);
	for (const auto &c : d.components)
		CHECK(c.vertices.size() == 1);

	// Path 0 - 1 - 2 through shared variables 5 and 6.
	NKInstance inst{9, 2, {}};
	for (Var i = 0; i < 9; ++i)
		inst.functions.push_back({i, {static_cast<Var>((i + 1) % 9), static_cast<Var>((i + 2) % 9)}, TruthTable(8, true)});
	inst.functions[0] = {0, {5, 3}, TruthTable::from_bitstring("01111111")};
	inst.functions[1] = {1, {5, 6}, TruthTable::from_bitstring("01111111")};
	inst.functions[2] = {2, {6, 4}, TruthTable::from_bitstring("01111111")};
	auto g = build_connection_graph(inst);
	d = components(inst, g);
	REQUIRE_FALSE(d.components.empty());
	CHECK(d.components[0].vertices == std::vector<std::size_t>{0, 1, 2});
	CHECK(d.components[0].variables == std::vector<Var>{0, 1, 2, 3, 4, 5, 6});
	CHECK(d.stats.max_variables == 7);
	CHECK(d.stats.max_vertices == 3);
}

TEST_CASE("components agree with a transitive-closure oracle")
{
	for (std::uint64_t seed = 0; seed < 60; ++seed)
	{
		auto n = 4 + seed % 9;
		auto inst = gen_uniform({n, 2, UniformModel{0.04 * (seed % 6)}, seed});
		auto d = components(inst, build_connection_graph(inst));
		std::set<std::set<std::size_t>> got;
		for (const auto &c : d.components)
		{
			got.insert({c.vertices.begin(), c.vertices.end()});
			std::set<Var> u;
			for (auto i : c.vertices)
				for (auto v : inst.functions[i].variables())
					u.insert(v);
			CHECK(std::vector<Var>(u.begin(), u.end()) == c.variables);
		}
		auto want = oracle::closure_components(inst);
		CHECK(got == std::set<std::set<std::size_t>>(want.begin(), want.end()));
		CHECK(d.stats.count == d.components.size());
	}
}

TEST_CASE("solve_component on forced and trivial components")
{
	auto inst = ring(5);
	Component c{{0}, {0, 1, 2}};
	auto all_ones = solve_component(inst, c, 30);
	REQUIRE(all_ones);
	CHECK(all_ones->values == std::vector<std::uint8_t>{0, 0, 0});

	inst.functions[0].table = TruthTable::from_bitstring("00000100"); // only row 101
	auto forced = solve_component(inst, c, 30);
	REQUIRE(forced);
	CHECK(forced->variables == std::vector<Var>{0, 1, 2});
	CHECK(forced->values == std::vector<std::uint8_t>{1, 0, 1});

	inst.functions[0].table = TruthTable(8, false);
	CHECK_FALSE(solve_component(inst, c, 30));

	Component wide{{0}, {0, 1, 2, 3, 4}};
	try
	{
		solve_component(inst, wide, 4, 17);
		FAIL("expected CapacityExceeded");
	}
	catch (const CapacityExceeded &e)
	{
		CHECK(e.component() == 17);
		CHECK(e.size() == 5);
	}
}

TEST_CASE("solve_component agrees with enumeration on random components")
{
	for (std::uint64_t seed = 0; seed < 80; ++seed)
	{
		auto inst = gen_fixed_ratio({10, 2, FixedRatioModel{2.0 + 0.01 * seed}, seed});
		auto d = components(inst, build_connection_graph(inst));
		for (const auto &c : d.components)
		{
			auto sol = solve_component(inst, c, 30);
			// Oracle: enumerate U in increasing order, variable U[0] most significant.
			std::optional<std::vector<std::uint8_t>> first;
			auto m = c.variables.size();
			for (std::uint64_t bits = 0; bits < (1u << m) && !first; ++bits)
			{
				std::vector<std::uint8_t> a(inst.n, 0);
				for (std::size_t j = 0; j < m; ++j)
					a[c.variables[j]] = (bits >> (m - 1 - j)) & 1u;
				bool ok = true;
				for (auto i : c.vertices)
					ok &= oracle::lookup(inst.functions[i], a);
				if (ok)
				{
					first.emplace();
					for (auto v : c.variables)
						first->push_back(a[v]);
				}
			}
			REQUIRE(sol.has_value() == first.has_value());
			if (sol)
				CHECK(sol->values == *first);
		}
	}
}

TEST_CASE("decompose_solve matches brute force and DPLL")
{
	auto ones = ring(6);
	auto s = decompose_solve(ones);
	REQUIRE(s.soluble);
	CHECK(s.witness == Assignment(6, 0));

	auto dead = ring(6);
	dead.functions[2].table = TruthTable(8, false);
	s = decompose_solve(dead);
	REQUIRE_FALSE(s.soluble);
	REQUIRE(std::holds_alternative<AllZeroFunction>(s.reason));
	CHECK(std::get<AllZeroFunction>(s.reason).function == 2);

	for (std::uint64_t seed = 0; seed < 100; ++seed)
	{
		auto n = 4 + seed % 9;
		auto inst = seed % 2 ? gen_fixed_ratio({n, 2, FixedRatioModel{2.2 + 0.02 * (seed % 40)}, seed})
		                     : gen_uniform({n, 2, UniformModel{0.2}, seed});
		auto got = decompose_solve(inst);
		bool truth = oracle::soluble(inst);
		REQUIRE(got.soluble == truth);
		if (got.soluble)
			CHECK(is_solution(inst, got.witness));
		CHECK((dpll(nk_to_cnf(inst)).verdict == Verdict::sat) == truth);
	}
}

TEST_CASE("conflicting pairs")
{
	auto f = zero_where(0, 1, 2, 0, 1); // zero whenever x0 = 1
	auto g = zero_where(0, 3, 4, 0, 0); // zero whenever x0 = 0
	CHECK(is_conflicting(f, g));
	CHECK(is_conflicting(g, f));

	auto far = zero_where(5, 6, 7, 0, 0);
	CHECK_FALSE(is_conflicting(f, far));

	LocalFitness ones{3, {0, 8}, TruthTable(8, true)};
	CHECK_FALSE(is_conflicting(f, ones));

	// Shared variable as a neighbour on one side, main on the other.
	auto h = zero_where(9, 0, 4, 1, 0); // zero whenever x0 = 0
	CHECK(is_conflicting(f, h));
}

TEST_CASE("conflicts need more than one zero per table at k = 2")
{
	// Every pair of single-zero tables sharing variable 0 in every layout.
	for (std::size_t slot_f = 0; slot_f < 3; ++slot_f)
		for (std::size_t slot_g = 0; slot_g < 3; ++slot_g)
			for (std::size_t rf = 0; rf < 8; ++rf)
				for (std::size_t rg = 0; rg < 8; ++rg)
				{
					std::vector<Var> fv{1, 2, 3}, gv{4, 5, 6};
					fv[slot_f] = 0;
					gv[slot_g] = 0;
					LocalFitness f{fv[0], {fv[1], fv[2]}, TruthTable(8, true)};
					LocalFitness g{gv[0], {gv[1], gv[2]}, TruthTable(8, true)};
					f.table.set(rf, false);
					g.table.set(rg, false);
					REQUIRE_FALSE(is_conflicting(f, g));
				}
	for (std::uint64_t seed = 0; seed < 20; ++seed)
		CHECK_FALSE(find_conflicting_pair(gen_fixed_ratio({300, 2, FixedRatioModel{1.0}, seed})));
	CHECK_FALSE(find_conflicting_pair(ring(9)));
}

TEST_CASE("an embedded conflicting pair is found and implies UNSAT")
{
	auto inst = gen_fixed_ratio({24, 2, FixedRatioModel{0.25}, 3});
	inst.functions[7] = zero_where(7, 20, 21, 0, 1);
	inst.functions[20] = zero_where(20, 7, 13, 1, 0);
	auto pair = find_conflicting_pair(inst);
	REQUIRE(pair);
	CHECK(*pair == std::pair<std::size_t, std::size_t>{7, 20});
	CHECK(dpll(nk_to_cnf(inst)).verdict == Verdict::unsat);
	auto s = decompose_solve(inst);
	CHECK_FALSE(s.soluble);
}

TEST_CASE("conflicting pair implies DPLL UNSAT on random instances")
{
	std::size_t fired = 0;
	for (std::uint64_t seed = 0; seed < 40; ++seed)
	{
		auto inst = gen_fixed_ratio({200, 2, FixedRatioModel{3.4}, seed});
		if (!find_conflicting_pair(inst))
			continue;
		++fired;
		CHECK(dpll(nk_to_cnf(inst)).verdict == Verdict::unsat);
	}
	CHECK(fired > 0);
}
