#pragma once

// Naive reference implementations used as test oracles. None of them call
// into the library beyond reading plain data members, so a bug in the
// library's row indexing, clause encoding or search cannot hide here.

#include <nkland/cnf.hpp>
#include <nkland/instance.hpp>
#include <nkland/rng.hpp>

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using nkland::Var;

// Bit v of `bits` (variable 0 least significant) as an assignment vector.
inline std::vector<std::uint8_t> unpack(std::uint64_t bits, std::size_t n)
{
	std::vector<std::uint8_t> a(n);
	for (std::size_t v = 0; v < n; ++v)
		a[v] = (bits >> v) & 1u;
	return a;
}

// Table lookup with the row built by string concatenation of the bits, read
// as a binary numeral (main variable first).
inline bool lookup(const nkland::LocalFitness &f, const std::vector<std::uint8_t> &a)
{
	std::size_t row = a[f.main_var];
	for (auto v : f.neighborhood)
		row = row * 2 + a[v];
	return f.table[row];
}

inline std::size_t fitness(const nkland::NKInstance &inst,
                           const std::vector<std::uint8_t> &a)
{
	std::size_t total = 0;
	for (const auto &f : inst.functions)
		total += lookup(f, a);
	return total;
}

inline bool clause_true(const nkland::Clause &c, const std::vector<std::uint8_t> &a)
{
	for (const auto &l : c)
		if ((a[l.var] == 1) != l.negated)
			return true;
	return false;
}

inline bool formula_true(const nkland::CnfFormula &f,
                         const std::vector<std::uint8_t> &a)
{
	if (f.has_empty_clause)
		return false;
	for (const auto &c : f.clauses)
		if (!clause_true(c, a))
			return false;
	return true;
}

// Counts assignments in increasing binary order; fine up to ~22 variables.
inline bool satisfiable(const nkland::CnfFormula &f)
{
	for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars); ++bits)
		if (formula_true(f, unpack(bits, f.num_vars)))
			return true;
	return false;
}

inline bool soluble(const nkland::NKInstance &inst)
{
	for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << inst.n); ++bits)
		if (fitness(inst, unpack(bits, inst.n)) == inst.n)
			return true;
	return false;
}

// Transitive closure over "share a variable and both have a zero row".
inline std::vector<std::set<std::size_t>> closure_components(const nkland::NKInstance &inst)
{
	auto m = inst.functions.size();
	auto vars = [&](std::size_t i) {
		std::set<Var> s{inst.functions[i].main_var};
		s.insert(inst.functions[i].neighborhood.begin(),
		         inst.functions[i].neighborhood.end());
		return s;
	};
	auto has_zero = [&](std::size_t i) {
		const auto &t = inst.functions[i].table;
		for (std::size_t r = 0; r < t.size(); ++r)
			if (!t[r])
				return true;
		return false;
	};
	std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
	for (std::size_t i = 0; i < m; ++i)
	{
		reach[i][i] = 1;
		for (std::size_t j = 0; j < m; ++j)
		{
			if (i == j || !has_zero(i) || !has_zero(j))
				continue;
			auto a = vars(i), b = vars(j);
			for (auto v : a)
				if (b.count(v))
					reach[i][j] = 1;
		}
	}
	for (std::size_t k = 0; k < m; ++k)
		for (std::size_t i = 0; i < m; ++i)
			for (std::size_t j = 0; j < m; ++j)
				if (reach[i][k] && reach[k][j])
					reach[i][j] = 1;
	std::vector<std::set<std::size_t>> out;
	std::vector<char> done(m, 0);
	for (std::size_t i = 0; i < m; ++i)
	{
		if (done[i])
			continue;
		std::set<std::size_t> comp;
		for (std::size_t j = 0; j < m; ++j)
			if (reach[i][j])
			{
				comp.insert(j);
				done[j] = 1;
			}
		out.push_back(comp);
	}
	return out;
}

// Random CNF with clause lengths in [1, max_len] over distinct variables.
inline nkland::CnfFormula random_cnf(std::size_t n, std::size_t m,
                                     std::size_t max_len, nkland::Rng &rng)
{
	nkland::CnfFormula f;
	f.num_vars = n;
	for (std::size_t i = 0; i < m; ++i)
	{
		auto len = 1 + rng.below(std::min(max_len, n));
		std::set<Var> used;
		nkland::Clause c;
		while (c.size() < len)
		{
			auto v = static_cast<Var>(rng.below(n));
			if (used.insert(v).second)
				c.push_back({v, rng.below(2) == 1});
		}
		f.add(std::move(c));
	}
	return f;
}

} // namespace oracle
