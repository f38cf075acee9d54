#include "nkland/structure.hpp"

#include "nkland/error.hpp"

#include <algorithm>
#include <numeric>

namespace nkland {

namespace {

Var var_at(const LocalFitness &f, std::size_t pos)
{
	return pos == 0 ? f.main_var : f.neighborhood[pos - 1];
}

// Variable -> functions reading it (as main variable or neighbour).
std::vector<std::vector<std::size_t>> occurrence_index(const NKInstance &inst)
{
	std::vector<std::vector<std::size_t>> occ(inst.n);
	for (std::size_t i = 0; i < inst.functions.size(); ++i)
	{
		const auto &f = inst.functions[i];
		for (std::size_t p = 0; p <= f.k(); ++p)
			occ[var_at(f, p)].push_back(i);
	}
	return occ;
}

std::vector<std::size_t> sharing_partners(
    const NKInstance &inst, const std::vector<std::vector<std::size_t>> &occ,
    std::size_t i)
{
	std::vector<std::size_t> out;
	const auto &f = inst.functions[i];
	for (std::size_t p = 0; p <= f.k(); ++p)
		for (auto j : occ[var_at(f, p)])
			if (j != i)
				out.push_back(j);
	std::sort(out.begin(), out.end());
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return out;
}

struct UnionFind
{
	std::vector<std::size_t> parent;

	explicit UnionFind(std::size_t n) : parent(n)
	{
		std::iota(parent.begin(), parent.end(), 0);
	}
	std::size_t find(std::size_t x)
	{
		while (parent[x] != x)
			x = parent[x] = parent[parent[x]];
		return x;
	}
	void unite(std::size_t a, std::size_t b)
	{
		a = find(a);
		b = find(b);
		if (a != b)
			parent[std::max(a, b)] = std::min(a, b);
	}
};

} // namespace

std::size_t ConnectionGraph::edge_count() const
{
	std::size_t twice = 0;
	for (const auto &adj : adjacency)
		twice += adj.size();
	return twice / 2;
}

bool ConnectionGraph::has_edge(std::size_t i, std::size_t j) const
{
	const auto &adj = adjacency[i];
	return std::binary_search(adj.begin(), adj.end(), j);
}

std::optional<std::size_t> find_all_zero_function(const NKInstance &inst)
{
	for (std::size_t i = 0; i < inst.functions.size(); ++i)
		if (inst.functions[i].table.all_zero())
			return i;
	return std::nullopt;
}

ConnectionGraph build_connection_graph(const NKInstance &inst)
{
	ConnectionGraph g;
	auto n = inst.functions.size();
	g.adjacency.resize(n);
	g.constrained.resize(n);
	for (std::size_t i = 0; i < n; ++i)
		g.constrained[i] = inst.functions[i].table.has_zero();

	auto occ = occurrence_index(inst);
	for (std::size_t i = 0; i < n; ++i)
	{
		if (!g.constrained[i])
			continue;
		for (auto j : sharing_partners(inst, occ, i))
			if (g.constrained[j])
				g.adjacency[i].push_back(j);
	}
	return g;
}

Decomposition components(const NKInstance &inst, const ConnectionGraph &graph)
{
	auto n = graph.vertex_count();
	UnionFind uf(n);
	for (std::size_t i = 0; i < n; ++i)
		for (auto j : graph.adjacency[i])
			uf.unite(i, j);

	// Roots are the smallest member, so components come out ordered by it.
	std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
	Decomposition d;
	for (std::size_t i = 0; i < n; ++i)
	{
		auto r = uf.find(i);
		if (slot[r] == static_cast<std::size_t>(-1))
		{
			slot[r] = d.components.size();
			d.components.emplace_back();
		}
		auto &c = d.components[slot[r]];
		c.vertices.push_back(i);
		const auto &f = inst.functions[i];
		for (std::size_t p = 0; p <= f.k(); ++p)
			c.variables.push_back(var_at(f, p));
	}

	auto &s = d.stats;
	s.count = d.components.size();
	for (auto &c : d.components)
	{
		std::sort(c.variables.begin(), c.variables.end());
		c.variables.erase(std::unique(c.variables.begin(), c.variables.end()),
		                  c.variables.end());
		s.variable_sizes.push_back(c.variables.size());
		s.vertex_sizes.push_back(c.vertices.size());
		s.max_variables = std::max(s.max_variables, c.variables.size());
		s.max_vertices = std::max(s.max_vertices, c.vertices.size());
	}
	return d;
}

std::optional<PartialAssignment> solve_component(const NKInstance &inst,
                                                 const Component &comp,
                                                 std::size_t cap,
                                                 std::size_t id)
{
	auto width = comp.variables.size();
	if (width > cap || width >= 63)
		throw CapacityExceeded(id, width, cap);

	// For each constrained member, the bit shift of each of its variables
	// inside the enumeration counter.
	struct Member
	{
		const TruthTable *table;
		std::vector<unsigned> shifts;
	};
	std::vector<Member> members;
	for (auto i : comp.vertices)
	{
		const auto &f = inst.functions[i];
		if (!f.table.has_zero())
			continue;
		Member m{&f.table, {}};
		for (std::size_t p = 0; p <= f.k(); ++p)
		{
			auto it = std::lower_bound(comp.variables.begin(),
			                           comp.variables.end(), var_at(f, p));
			auto j = static_cast<unsigned>(it - comp.variables.begin());
			m.shifts.push_back(static_cast<unsigned>(width - 1 - j));
		}
		members.push_back(std::move(m));
	}

	auto total = std::uint64_t{1} << width;
	for (std::uint64_t bits = 0; bits < total; ++bits)
	{
		bool ok = true;
		for (const auto &m : members)
		{
			std::size_t row = 0;
			for (auto s : m.shifts)
				row = (row << 1) | ((bits >> s) & 1u);
			if (!(*m.table)[row])
			{
				ok = false;
				break;
			}
		}
		if (!ok)
			continue;
		PartialAssignment pa{comp.variables, std::vector<std::uint8_t>(width)};
		for (std::size_t j = 0; j < width; ++j)
			pa.values[j] = (bits >> (width - 1 - j)) & 1u;
		return pa;
	}
	return std::nullopt;
}

Solubility decompose_solve(const NKInstance &inst, std::size_t cap)
{
	if (auto i = find_all_zero_function(inst))
		return Solubility::no(AllZeroFunction{*i});

	auto graph = build_connection_graph(inst);
	auto dec = components(inst, graph);
	Assignment witness(inst.n, 0);
	for (std::size_t id = 0; id < dec.components.size(); ++id)
	{
		const auto &c = dec.components[id];
		bool any = std::any_of(c.vertices.begin(), c.vertices.end(),
		                       [&](auto i) { return graph.constrained[i]; });
		if (!any)
			continue;
		auto part = solve_component(inst, c, cap, id);
		if (!part)
			return Solubility::no(ComponentUnsat{id});
		for (std::size_t j = 0; j < part->variables.size(); ++j)
			witness[part->variables[j]] = part->values[j];
	}
	return Solubility::yes(std::move(witness));
}

bool is_conflicting(const LocalFitness &f, const LocalFitness &g)
{
	// Shared variables and their positions inside f and g.
	std::vector<std::size_t> fpos, gpos;
	for (std::size_t p = 0; p <= f.k(); ++p)
		for (std::size_t q = 0; q <= g.k(); ++q)
			if (var_at(f, p) == var_at(g, q))
			{
				fpos.push_back(p);
				gpos.push_back(q);
			}
	auto shared = fpos.size();
	if (shared == 0)
		return false;

	// f and g conflict iff no pattern of the shared variables extends to a
	// one-row of both tables.
	auto project = [&](const LocalFitness &h, const auto &pos, std::size_t row) {
		auto width = h.k() + 1;
		std::size_t key = 0;
		for (std::size_t s = 0; s < shared; ++s)
			key = (key << 1) | ((row >> (width - 1 - pos[s])) & 1u);
		return key;
	};
	std::vector<bool> seen(std::size_t{1} << shared, false);
	for (std::size_t r = 0; r < f.table.size(); ++r)
		if (f.table[r])
			seen[project(f, fpos, r)] = true;
	for (std::size_t r = 0; r < g.table.size(); ++r)
		if (g.table[r] && seen[project(g, gpos, r)])
			return false;
	return true;
}

std::optional<std::pair<std::size_t, std::size_t>>
find_conflicting_pair(const NKInstance &inst)
{
	auto occ = occurrence_index(inst);
	for (std::size_t i = 0; i < inst.functions.size(); ++i)
		for (auto j : sharing_partners(inst, occ, i))
			if (j > i && is_conflicting(inst.functions[i], inst.functions[j]))
				return std::pair{i, j};
	return std::nullopt;
}

} // namespace nkland
