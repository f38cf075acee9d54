#include "nkland/cnf.hpp"

#include "nkland/error.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace nkland {

bool satisfies(const Clause &c, std::span<const std::uint8_t> a)
{
	return std::any_of(c.begin(), c.end(), [&](Literal l) {
		return l.satisfied_by(a[l.var]);
	});
}

bool satisfies(const CnfFormula &cnf, std::span<const std::uint8_t> a)
{
	if (cnf.has_empty_clause)
		return false;
	return std::all_of(cnf.clauses.begin(), cnf.clauses.end(),
	                   [&](const Clause &c) { return satisfies(c, a); });
}

std::vector<Clause> local_to_clauses(const LocalFitness &f)
{
	auto vars = f.variables();
	auto width = vars.size();
	std::vector<Clause> out;
	for (std::size_t r = 0; r < f.table.size(); ++r)
	{
		if (f.table[r])
			continue;
		Clause c;
		c.reserve(width);
		// Literal is positive iff the variable's bit in r is 0, so that r is
		// the only falsifying row.
		for (std::size_t j = 0; j < width; ++j)
		{
			bool bit = (r >> (width - 1 - j)) & 1u;
			c.push_back({vars[j], bit});
		}
		out.push_back(std::move(c));
	}
	return out;
}

CnfFormula nk_to_cnf(const NKInstance &inst)
{
	CnfFormula cnf;
	cnf.num_vars = inst.n;
	for (std::size_t i = 0; i < inst.functions.size(); ++i)
	{
		const auto &f = inst.functions[i];
		std::size_t r = 0;
		for (auto &c : local_to_clauses(f))
		{
			while (f.table[r])
				++r;
			cnf.add(std::move(c), {i, r});
			++r;
		}
	}
	return cnf;
}

void write_dimacs(const CnfFormula &cnf, std::ostream &out)
{
	out << "p cnf " << cnf.num_vars << ' '
	    << cnf.clauses.size() + (cnf.has_empty_clause ? 1 : 0) << '\n';
	for (std::size_t c = 0; c < cnf.clauses.size(); ++c)
	{
		const auto &o = cnf.origins[c];
		if (!o.synthetic())
			out << "c origin " << o.function << ' ' << o.row << '\n';
		for (auto l : cnf.clauses[c])
			out << (l.negated ? "-" : "") << l.var + 1 << ' ';
		out << "0\n";
	}
	if (cnf.has_empty_clause)
	{
		const auto &o = cnf.empty_clause_origin;
		if (!o.synthetic())
			out << "c origin " << o.function << ' ' << o.row << '\n';
		out << "0\n";
	}
}

std::string to_dimacs(const CnfFormula &cnf)
{
	std::ostringstream ss;
	write_dimacs(cnf, ss);
	return ss.str();
}

CnfFormula parse_dimacs(std::istream &in)
{
	CnfFormula cnf;
	bool have_header = false;
	std::size_t declared = 0, line_no = 0, parsed = 0;
	Clause current;
	ClauseOrigin pending;
	std::string line;

	auto finish_clause = [&](std::size_t at) {
		if (current.empty())
		{
			cnf.has_empty_clause = true;
			cnf.empty_clause_origin = pending;
		}
		else
		{
			for (std::size_t i = 0; i < current.size(); ++i)
				for (std::size_t j = 0; j < i; ++j)
					if (current[i].var == current[j].var)
						throw ParseError(at, "variable repeated in clause");
			cnf.add(std::move(current), pending);
		}
		current.clear();
		pending = {};
		++parsed;
	};

	while (std::getline(in, line))
	{
		++line_no;
		std::istringstream ls(line);
		std::string tok;
		if (!(ls >> tok))
			continue;
		if (tok == "c")
		{
			std::string kind;
			std::size_t f, r;
			if (ls >> kind && kind == "origin" && ls >> f >> r)
				pending = {f, r};
			continue;
		}
		if (tok[0] == 'c')
			continue;
		if (tok == "p")
		{
			std::string fmt;
			long long nv = -1, nc = -1;
			if (have_header || !(ls >> fmt >> nv >> nc) || fmt != "cnf" ||
			    nv < 0 || nc < 0 || (ls >> tok))
				throw ParseError(line_no, "malformed header");
			have_header = true;
			cnf.num_vars = static_cast<std::size_t>(nv);
			declared = static_cast<std::size_t>(nc);
			continue;
		}
		if (!have_header)
			throw ParseError(line_no, "clause before 'p cnf' header");

		do
		{
			long long lit;
			std::istringstream ts(tok);
			if (!(ts >> lit) || !ts.eof())
				throw ParseError(line_no, "bad literal '" + tok + "'");
			if (lit == 0)
			{
				finish_clause(line_no);
				continue;
			}
			auto v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
			if (v > cnf.num_vars)
				throw ParseError(line_no, "literal " + tok + " out of range");
			current.push_back({static_cast<Var>(v - 1), lit < 0});
		} while (ls >> tok);
	}

	if (!have_header)
		throw ParseError(line_no, "missing 'p cnf' header");
	if (!current.empty())
		throw ParseError(line_no, "last clause is missing its 0 terminator");
	if (parsed != declared)
		throw ParseError(line_no, "header declares " + std::to_string(declared) +
		                              " clauses, found " + std::to_string(parsed));
	return cnf;
}

CnfFormula parse_dimacs(const std::string &text)
{
	std::istringstream ss(text);
	return parse_dimacs(ss);
}

} // namespace nkland
