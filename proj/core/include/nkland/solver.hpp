#pragma once

// Ground-truth satisfiability: exhaustive enumeration for tiny formulas and a
// complete DPLL search. The search runs unit propagation and pure literals at
// every node and backjumps over decisions that played no part in a conflict;
// it never learns clauses. Before branching, clauses that differ in the sign
// of exactly one literal are merged into their resolvent until nothing new
// appears, and failed-literal probing is run at the root.

#include "nkland/cnf.hpp"

#include <chrono>
#include <cstdint>

namespace nkland {

enum class Verdict
{
	sat,
	unsat,
	budget_exceeded,
};

const char *to_string(Verdict v);

struct SolveStats
{
	std::uint64_t decisions = 0;
	std::uint64_t propagations = 0; // unit and pure-literal assignments
	std::uint64_t backtracks = 0;
	std::chrono::nanoseconds wall{0};
	// Decided by merging, propagation or root probing before any branching.
	bool preprocessing = false;
};

struct SolveResult
{
	Verdict verdict = Verdict::unsat;
	Assignment witness; // set iff sat
	SolveStats stats;
};

inline constexpr std::size_t kBruteForceMaxVars = 24;
inline constexpr std::uint64_t kDefaultDecisionBudget = 10'000'000;

/// First satisfying assignment in lexicographic order (variable 0 most
/// significant). Throws InvalidParameters above kBruteForceMaxVars.
SolveResult brute_force(const CnfFormula &cnf);

/// Branches on the variable with most occurrences in the currently shortest
/// clauses (lowest index on ties), false first. Pure literals are assigned
/// during preprocessing and at every node. Merged resolvents are implied by
/// the input, so the verdict and any witness refer to the original formula. Exceeding `budget` decisions
/// yields Verdict::budget_exceeded, never unsat.
SolveResult dpll(const CnfFormula &cnf,
                 std::uint64_t budget = kDefaultDecisionBudget);

} // namespace nkland
