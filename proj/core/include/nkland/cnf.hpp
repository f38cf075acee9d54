#pragma once

// CNF formulas and the reduction of an NK decision instance to (k+1)-SAT:
// every zero row of a local fitness table becomes one clause over that
// function's variables, falsified by exactly that row.

#include "nkland/instance.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nkland {

struct Literal
{
	Var var = 0;
	bool negated = false;

	Literal operator~() const { return {var, !negated}; }
	/// 2 * var + negated; dense index for per-literal tables.
	std::uint32_t code() const { return 2 * var + (negated ? 1u : 0u); }
	static Literal from_code(std::uint32_t c) { return {c >> 1, (c & 1u) != 0}; }

	bool satisfied_by(std::uint8_t value) const { return (value != 0) != negated; }

	friend auto operator<=>(const Literal &, const Literal &) = default;
};

inline Literal pos(Var v) { return {v, false}; }
inline Literal neg(Var v) { return {v, true}; }

using Clause = std::vector<Literal>;

/// Where a clause came from: zero row `row` of function `function`, or
/// nothing for synthetic clauses.
struct ClauseOrigin
{
	static constexpr std::size_t none = static_cast<std::size_t>(-1);
	std::size_t function = none;
	std::size_t row = none;

	bool synthetic() const { return function == none; }
	friend bool operator==(const ClauseOrigin &, const ClauseOrigin &) = default;
};

struct CnfFormula
{
	std::size_t num_vars = 0;
	std::vector<Clause> clauses;
	// Parallel to clauses.
	std::vector<ClauseOrigin> origins;
	// Formula-level empty clause: unsatisfiable regardless of `clauses`.
	bool has_empty_clause = false;
	ClauseOrigin empty_clause_origin;

	void add(Clause c, ClauseOrigin origin = {})
	{
		clauses.push_back(std::move(c));
		origins.push_back(origin);
	}
	std::size_t size() const { return clauses.size(); }

	friend bool operator==(const CnfFormula &, const CnfFormula &) = default;
};

bool satisfies(const Clause &c, std::span<const std::uint8_t> a);
bool satisfies(const CnfFormula &cnf, std::span<const std::uint8_t> a);

/// One clause per zero row of f, literals ordered main variable first.
std::vector<Clause> local_to_clauses(const LocalFitness &f);
CnfFormula nk_to_cnf(const NKInstance &inst);

/// DIMACS CNF. A clause with an origin is preceded by a comment line
/// "c origin <function> <row>", which parse_dimacs reads back; a formula-level
/// empty clause is written as a bare "0" line.
void write_dimacs(const CnfFormula &cnf, std::ostream &out);
std::string to_dimacs(const CnfFormula &cnf);
/// Throws ParseError with the offending line number.
CnfFormula parse_dimacs(std::istream &in);
CnfFormula parse_dimacs(const std::string &text);

} // namespace nkland
