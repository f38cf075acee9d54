#pragma once

// Experiment harness: one trial runs the whole detector/solver pipeline on a
// freshly generated instance; a sweep runs seeded trials over an (n, z) or
// (n, p) grid and aggregates them per cell.

#include "nkland/generator.hpp"
#include "nkland/solver.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nkland {

/// Pipeline stage that first established the verdict.
enum class Stage
{
	all_zero,
	conflicting_pair,
	two_sat,
	dpll_preprocessing,
	dpll_search,
	undecided, // budget exceeded or generation error
};

const char *to_string(Stage s);

struct TrialOptions
{
	// Run every stage even after an earlier one proves insolubility.
	bool full_stats = true;
	std::uint64_t budget = kDefaultDecisionBudget;
};

struct TrialRecord
{
	GenParams params;
	std::size_t trial = 0;
	std::uint64_t digest = 0;

	std::optional<std::size_t> all_zero_function;
	std::optional<std::pair<std::size_t, std::size_t>> conflicting_pair;
	bool two_sat_ran = false;
	bool two_sat_unsat = false;
	std::size_t two_sat_clauses = 0;
	SolveStats two_sat_stats;

	std::optional<Verdict> full_verdict; // unset when the full solve was skipped
	SolveStats full_stats;
	std::size_t full_clauses = 0;

	Stage decided_by = Stage::undecided;
	std::string error;

	/// Some stage proved the instance insoluble.
	bool insoluble() const;
	/// Decided without a single DPLL branching decision.
	bool decided_without_search() const;
	/// Earlier-stage insolubility agrees with the full solve (vacuously true
	/// when the full solve did not run).
	bool consistent() const;
};

TrialRecord run_trial(const GenParams &params, const TrialOptions &options = {});

enum class SweepParameter
{
	z, // fixed ratio model
	p, // uniform probability model
};

struct SweepGrid
{
	std::size_t k = 2;
	SweepParameter parameter = SweepParameter::z;
	std::vector<std::size_t> ns;
	std::vector<double> values;
	std::size_t trials = 100;
	std::uint64_t root_seed = 0;
};

/// Seed of trial `index` in cell (n, value): independent of every other cell.
std::uint64_t trial_seed(std::uint64_t root, std::size_t n, double value,
                         std::size_t index);

GenParams cell_params(const SweepGrid &grid, std::size_t n, double value,
                      std::size_t index);

/// Parses "a:b:step" (inclusive) or a comma list into grid values.
std::vector<double> parse_value_grid(const std::string &text);
std::vector<std::size_t> parse_size_list(const std::string &text);

struct CellSummary
{
	std::size_t n = 0;
	double value = 0.0;
	std::size_t trials = 0;
	double frac_insoluble_full = 0.0;
	double frac_insoluble_2sat = 0.0;
	double mean_decisions = 0.0;
	double median_decisions = 0.0;
	double sqrt_mean_decisions = 0.0;
	std::size_t budget_exceeded = 0;
	std::size_t insoluble = 0;
	std::size_t insoluble_without_search = 0;
	std::size_t conflicting_pairs = 0;
	std::size_t inconsistent = 0;
};

struct SweepSummary
{
	SweepParameter parameter = SweepParameter::z;
	std::vector<CellSummary> cells; // n ascending, then value ascending
	// Linear interpolation at fraction 0.5, per n.
	std::map<std::size_t, std::optional<double>> crossing_full;
	std::map<std::size_t, std::optional<double>> crossing_2sat;
};

/// First grid value with fraction >= 0.5, interpolated against the previous
/// grid value. `points` must be sorted by value.
std::optional<double>
crossing_point(const std::vector<std::pair<double, double>> &points);

SweepSummary summarize(const SweepGrid &grid,
                       const std::vector<TrialRecord> &records);

struct SweepOptions
{
	TrialOptions trial;
	// 0 = hardware concurrency, further capped by NKLAND_WORKERS.
	std::size_t workers = 0;
	// Called once per finished cell, in grid order, with records sorted by
	// trial index.
	std::function<void(const std::vector<TrialRecord> &)> on_cell;
};

struct SweepResult
{
	std::vector<TrialRecord> records;
	SweepSummary summary;
};

SweepResult sweep(const SweepGrid &grid, const SweepOptions &options = {});

/// Worker count after applying the NKLAND_WORKERS environment cap.
std::size_t effective_workers(std::size_t requested);

} // namespace nkland
