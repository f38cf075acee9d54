#include "nkland/two_sat.hpp"

#include "nkland/error.hpp"

#include <algorithm>
#include <cmath>

namespace nkland {

namespace {

std::size_t position_of(const std::vector<Var> &vars, Var v)
{
	auto it = std::find(vars.begin(), vars.end(), v);
	if (it == vars.end())
		throw InvalidParameters("clause mentions a variable outside the function");
	return static_cast<std::size_t>(it - vars.begin());
}

} // namespace

bool entails(const LocalFitness &f, const Clause &c)
{
	auto vars = f.variables();
	auto width = vars.size();
	std::vector<std::pair<unsigned, bool>> probes;
	for (auto l : c)
		probes.push_back({static_cast<unsigned>(width - 1 - position_of(vars, l.var)),
		                  l.negated});

	for (std::size_t r = 0; r < f.table.size(); ++r)
	{
		if (!f.table[r])
			continue;
		bool sat = std::any_of(probes.begin(), probes.end(), [&](auto pr) {
			bool bit = (r >> pr.first) & 1u;
			return bit != pr.second;
		});
		if (!sat)
			return false;
	}
	return true;
}

ImpliedClauses implied_binary_clauses(const LocalFitness &f)
{
	ImpliedClauses out;
	if (!f.table.has_zero())
		return out;
	if (f.table.all_zero())
	{
		out.empty_clause = true;
		return out;
	}

	auto vars = f.variables();
	std::vector<Literal> units;
	for (auto v : vars)
		for (bool negated : {false, true})
			if (entails(f, {{v, negated}}))
				units.push_back({v, negated});
	for (auto l : units)
		out.clauses.push_back({l});

	auto is_unit = [&](Literal l) {
		return std::find(units.begin(), units.end(), l) != units.end();
	};
	for (std::size_t a = 0; a < vars.size(); ++a)
		for (std::size_t b = a + 1; b < vars.size(); ++b)
			for (bool na : {false, true})
				for (bool nb : {false, true})
				{
					Literal la{vars[a], na}, lb{vars[b], nb};
					if (is_unit(la) || is_unit(lb))
						continue;
					if (entails(f, {la, lb}))
						out.clauses.push_back({la, lb});
				}
	return out;
}

CnfFormula extract_two_sat(const NKInstance &inst)
{
	CnfFormula cnf;
	cnf.num_vars = inst.n;
	for (std::size_t i = 0; i < inst.functions.size(); ++i)
	{
		auto implied = implied_binary_clauses(inst.functions[i]);
		if (implied.empty_clause && !cnf.has_empty_clause)
		{
			cnf.has_empty_clause = true;
			cnf.empty_clause_origin = {i, ClauseOrigin::none};
		}
		for (auto &c : implied.clauses)
			cnf.add(std::move(c), {i, ClauseOrigin::none});
	}
	return cnf;
}

ImplicationGraph ImplicationGraph::build(const CnfFormula &cnf)
{
	ImplicationGraph g;
	g.num_vars = cnf.num_vars;
	g.successors.resize(2 * cnf.num_vars);
	for (const auto &c : cnf.clauses)
	{
		if (c.size() == 1)
			g.successors[(~c[0]).code()].push_back(c[0].code());
		else if (c.size() == 2)
		{
			g.successors[(~c[0]).code()].push_back(c[1].code());
			g.successors[(~c[1]).code()].push_back(c[0].code());
		}
		else
			throw InvalidParameters("2-SAT input has a clause of size " +
			                        std::to_string(c.size()));
	}
	return g;
}

std::size_t ImplicationGraph::edge_count() const
{
	std::size_t e = 0;
	for (const auto &s : successors)
		e += s.size();
	return e;
}

bool ImplicationGraph::skew_symmetric() const
{
	// Multiset of edges u->w must equal the multiset of ~w->~u.
	std::vector<std::pair<std::uint32_t, std::uint32_t>> fwd, mirrored;
	for (std::uint32_t u = 0; u < successors.size(); ++u)
		for (auto w : successors[u])
		{
			fwd.push_back({u, w});
			mirrored.push_back({w ^ 1u, u ^ 1u});
		}
	std::sort(fwd.begin(), fwd.end());
	std::sort(mirrored.begin(), mirrored.end());
	return fwd == mirrored;
}

namespace {

// Iterative Tarjan. Component ids are assigned in completion order, which is
// a reverse topological order of the condensation.
std::vector<std::uint32_t> strongly_connected(const ImplicationGraph &g)
{
	constexpr auto unvisited = static_cast<std::uint32_t>(-1);
	auto nodes = static_cast<std::uint32_t>(g.successors.size());
	std::vector<std::uint32_t> index(nodes, unvisited), low(nodes),
	    comp(nodes, unvisited);
	std::vector<std::uint32_t> stack;
	std::vector<std::pair<std::uint32_t, std::size_t>> call;
	std::uint32_t counter = 0, comps = 0;

	for (std::uint32_t root = 0; root < nodes; ++root)
	{
		if (index[root] != unvisited)
			continue;
		call.push_back({root, 0});
		index[root] = low[root] = counter++;
		stack.push_back(root);
		while (!call.empty())
		{
			auto &[v, next] = call.back();
			const auto &succ = g.successors[v];
			if (next < succ.size())
			{
				auto w = succ[next++];
				if (index[w] == unvisited)
				{
					index[w] = low[w] = counter++;
					stack.push_back(w);
					call.push_back({w, 0});
				}
				else if (comp[w] == unvisited)
					low[v] = std::min(low[v], index[w]);
				continue;
			}
			auto done = v;
			call.pop_back();
			if (!call.empty())
				low[call.back().first] =
				    std::min(low[call.back().first], low[done]);
			if (low[done] == index[done])
			{
				std::uint32_t w;
				do
				{
					w = stack.back();
					stack.pop_back();
					comp[w] = comps;
				} while (w != done);
				++comps;
			}
		}
	}
	return comp;
}

} // namespace

TwoSatResult solve_two_sat(const CnfFormula &cnf)
{
	for (const auto &c : cnf.clauses)
		if (c.size() > 2 || c.empty())
			throw InvalidParameters("2-SAT input has a clause of size " +
			                        std::to_string(c.size()));
	TwoSatResult res;
	if (cnf.has_empty_clause)
		return res;

	auto g = ImplicationGraph::build(cnf);
	auto comp = strongly_connected(g);
	for (Var v = 0; v < cnf.num_vars; ++v)
		if (comp[pos(v).code()] == comp[neg(v).code()])
		{
			res.contradictory_var = v;
			return res;
		}

	res.satisfiable = true;
	res.witness.resize(cnf.num_vars);
	for (Var v = 0; v < cnf.num_vars; ++v)
		res.witness[v] = comp[pos(v).code()] < comp[neg(v).code()] ? 1 : 0;
	return res;
}

T3Module build_t3_module(std::size_t p)
{
	if (p < 1)
		throw InvalidParameters("t-3-module needs p >= 1");
	T3Module m;
	m.p = p;
	auto t = m.t();
	m.clauses.num_vars = m.projection.num_vars = (3 * p + 1) + t;

	auto pair_for = [&](std::size_t idx) -> std::pair<Literal, Literal> {
		auto u = T3Module::u;
		if (idx < p)
			return {neg(u(idx)), pos(u(idx + 1))};
		if (idx == p)
			return {neg(u(p)), neg(u(0))};
		if (idx < 3 * p)
			return {neg(u(idx)), pos(u(idx + 1))};
		if (idx == 3 * p)
			return {neg(u(3 * p)), pos(u(0))};
		if (idx == 3 * p + 1)
			return {neg(u(0)), pos(u(1))};
		return {pos(u(0)), pos(u(p + 1))};
	};

	for (std::size_t idx = 1; idx <= t; ++idx)
	{
		auto [a, b] = pair_for(idx);
		m.clauses.add({a, b, pos(m.z(idx))});
		m.clauses.add({a, b, neg(m.z(idx))});
		m.projection.add({a, b});
	}
	return m;
}

double module_ratio(double alpha)
{
	return (1.0 - alpha) / 28.0 + (6.0 / 56.0) * alpha;
}

double threshold_constant()
{
	return 2.0 + (14.0 / (3.0 + std::sqrt(5.0)) - 1.0) / 2.0;
}

} // namespace nkland
