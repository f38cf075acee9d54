#pragma once

// The implied 2-SAT sub-problem of an NK instance, a linear-time 2-SAT solver
// over the implication graph, t-3-modules, and the threshold constant that
// follows from counting them.

#include "nkland/cnf.hpp"
#include "nkland/instance.hpp"

#include <optional>
#include <vector>

namespace nkland {

/// True iff every one-row of f's table satisfies c. c must only mention f's
/// variables.
bool entails(const LocalFitness &f, const Clause &c);

struct ImpliedClauses
{
	// Implied units, then implied 2-clauses not subsumed by a unit. Literals
	// follow f's variable order (main variable first).
	std::vector<Clause> clauses;
	// f has no one-row: the implied clause set is the empty clause.
	bool empty_clause = false;
};

ImpliedClauses implied_binary_clauses(const LocalFitness &f);

/// Union of implied_binary_clauses over all functions. Origins carry the
/// function index (row = none).
CnfFormula extract_two_sat(const NKInstance &inst);

/// Literal nodes indexed by Literal::code(). Clause (a | b) gives ~a -> b and
/// ~b -> a; unit (a) gives ~a -> a.
struct ImplicationGraph
{
	std::size_t num_vars = 0;
	std::vector<std::vector<std::uint32_t>> successors;

	static ImplicationGraph build(const CnfFormula &cnf);
	std::size_t edge_count() const;
	bool skew_symmetric() const;
};

struct TwoSatResult
{
	bool satisfiable = false;
	Assignment witness; // set iff satisfiable
	// Lowest variable whose two literals share a strongly connected
	// component; empty when UNSAT comes from an empty clause.
	std::optional<Var> contradictory_var;
};

/// Throws InvalidParameters on a clause with more than two literals.
TwoSatResult solve_two_sat(const CnfFormula &cnf);

/// Family of 2(3p+2) 3-clauses whose 2-SAT projection holds the cycle
///   u0 -> u1 -> ... -> up -> ~u0 -> u(p+1) -> ... -> u(3p) -> u0.
/// Variable layout: u_i is variable i (0 <= i <= 3p), z_m is variable
/// 3p + m (1 <= m <= 3p + 2).
struct T3Module
{
	std::size_t p = 0;
	CnfFormula clauses;    // M_1 .. M_t, two clauses each
	CnfFormula projection; // common 2-clause of each M_m

	std::size_t t() const { return 3 * p + 2; }
	static Var u(std::size_t i) { return static_cast<Var>(i); }
	Var z(std::size_t m) const { return static_cast<Var>(3 * p + m); }
};

/// Throws InvalidParameters for p < 1.
T3Module build_t3_module(std::size_t p);

/// Probability that a local fitness function on exactly a 3-module's
/// variables implies it, at z = 2 + alpha: (1 - alpha)/28 + (6/56) alpha.
double module_ratio(double alpha);

/// z* = 2 + alpha*, where alpha* solves 2 (3 + sqrt 5) module_ratio(alpha) = 1.
double threshold_constant();

} // namespace nkland
