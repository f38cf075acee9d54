#pragma once

// Structural insolubility detectors and the decomposition solver.
//
// Connection graph: one vertex per local fitness function; i and j are
// adjacent iff their full variable sets ({main} + neighbourhood) intersect and
// both tables contain at least one zero. Components are independent
// sub-problems over their variable sets U_i.

#include "nkland/instance.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace nkland {

inline constexpr std::size_t kDefaultComponentCap = 30;

struct ConnectionGraph
{
	// Sorted adjacency lists, one per function.
	std::vector<std::vector<std::size_t>> adjacency;
	// Whether each function's table contains a zero.
	std::vector<bool> constrained;

	std::size_t vertex_count() const { return adjacency.size(); }
	std::size_t edge_count() const;
	bool has_edge(std::size_t i, std::size_t j) const;
};

struct Component
{
	std::vector<std::size_t> vertices; // ascending
	std::vector<Var> variables;        // U_i, ascending
};

struct ComponentStats
{
	std::size_t count = 0;
	// M(n,k,p): the largest |U_i|.
	std::size_t max_variables = 0;
	// Largest component measured in functions.
	std::size_t max_vertices = 0;
	std::vector<std::size_t> variable_sizes;
	std::vector<std::size_t> vertex_sizes;
};

struct Decomposition
{
	std::vector<Component> components; // ordered by smallest vertex
	ComponentStats stats;
};

struct AllZeroFunction
{
	std::size_t function;
};
struct ConflictingPair
{
	std::size_t first, second;
};
struct ComponentUnsat
{
	std::size_t component;
};
struct SolverUnsat
{};

using InsolubleReason =
    std::variant<AllZeroFunction, ConflictingPair, ComponentUnsat, SolverUnsat>;

struct Solubility
{
	bool soluble = false;
	Assignment witness;    // set iff soluble
	InsolubleReason reason; // meaningful iff !soluble

	static Solubility yes(Assignment a) { return {true, std::move(a), {}}; }
	static Solubility no(InsolubleReason r) { return {false, {}, r}; }
};

/// Partial assignment over a component: values[j] is the value of
/// component.variables[j].
struct PartialAssignment
{
	std::vector<Var> variables;
	std::vector<std::uint8_t> values;
};

std::optional<std::size_t> find_all_zero_function(const NKInstance &inst);

ConnectionGraph build_connection_graph(const NKInstance &inst);
Decomposition components(const NKInstance &inst, const ConnectionGraph &graph);

/// Exhaustive search over 2^|U| assignments in lexicographic order (first
/// variable of U most significant). Throws CapacityExceeded when |U| > cap;
/// `id` is only used in that error.
std::optional<PartialAssignment> solve_component(const NKInstance &inst,
                                                 const Component &comp,
                                                 std::size_t cap,
                                                 std::size_t id = 0);

/// All-zero scan, then per-component brute force. Variables outside every
/// U_i are set to 0 in the witness.
Solubility decompose_solve(const NKInstance &inst,
                           std::size_t cap = kDefaultComponentCap);

/// True iff f and g share a variable and no assignment makes both 1.
bool is_conflicting(const LocalFitness &f, const LocalFitness &g);

/// First conflicting pair (i < j) in order of i, then j; only pairs sharing
/// a variable are examined.
std::optional<std::pair<std::size_t, std::size_t>>
find_conflicting_pair(const NKInstance &inst);

} // namespace nkland
