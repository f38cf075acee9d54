#include "nkland/solver.hpp"

#include "nkland/error.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <span>

namespace nkland {

const char *to_string(Verdict v)
{
	switch (v)
	{
	case Verdict::sat:
		return "SAT";
	case Verdict::unsat:
		return "UNSAT";
	case Verdict::budget_exceeded:
		return "BUDGET_EXCEEDED";
	}
	return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

} // namespace

SolveResult brute_force(const CnfFormula &cnf)
{
	auto start = Clock::now();
	auto n = cnf.num_vars;
	if (n > kBruteForceMaxVars)
		throw InvalidParameters("brute force is limited to " +
		                        std::to_string(kBruteForceMaxVars) +
		                        " variables");
	SolveResult res;
	if (cnf.has_empty_clause)
	{
		res.stats.wall = Clock::now() - start;
		return res;
	}

	// Bit (n - 1 - v) of the counter is variable v.
	struct Masks
	{
		std::uint64_t positive = 0, negative = 0;
	};
	std::vector<Masks> masks;
	for (const auto &c : cnf.clauses)
	{
		Masks m;
		for (auto l : c)
			(l.negated ? m.negative : m.positive) |= std::uint64_t{1} << (n - 1 - l.var);
		masks.push_back(m);
	}

	auto total = std::uint64_t{1} << n;
	for (std::uint64_t bits = 0; bits < total; ++bits)
	{
		bool ok = std::all_of(masks.begin(), masks.end(), [&](const Masks &m) {
			return (bits & m.positive) != 0 || (~bits & m.negative) != 0;
		});
		if (!ok)
			continue;
		res.verdict = Verdict::sat;
		res.witness.resize(n);
		for (std::size_t v = 0; v < n; ++v)
			res.witness[v] = (bits >> (n - 1 - v)) & 1u;
		break;
	}
	res.stats.wall = Clock::now() - start;
	return res;
}

namespace {

using Codes = std::vector<std::uint32_t>;

// Closes the clause set under merging: two clauses that differ only in the
// sign of one literal are joined by their resolvent, which drops that
// literal. Every resolvent is a strict subset of a parent, so the closure is
// finite. Returns nullopt when the empty clause is derived.
std::optional<std::vector<Codes>> merge_closure(std::vector<Codes> clauses)
{
	std::set<Codes> known;
	for (auto &c : clauses)
	{
		std::sort(c.begin(), c.end());
		known.insert(c);
	}
	// Key: the clause minus one literal, followed by that literal's variable
	// (tagged); value: the signs seen at that position.
	std::map<Codes, std::uint8_t> signs;
	std::vector<Codes> out(known.begin(), known.end());
	for (std::size_t next = 0; next < out.size(); ++next)
	{
		auto c = out[next];
		for (std::size_t i = 0; i < c.size(); ++i)
		{
			Codes rest;
			rest.reserve(c.size());
			for (std::size_t j = 0; j < c.size(); ++j)
				if (j != i)
					rest.push_back(c[j]);
			auto key = rest;
			key.push_back(0x80000000u | (c[i] >> 1));
			auto &seen = signs[key];
			seen |= static_cast<std::uint8_t>(1u << (c[i] & 1u));
			if (seen != 3)
				continue;
			if (rest.empty())
				return std::nullopt;
			if (known.insert(rest).second)
				out.push_back(std::move(rest));
		}
	}
	return out;
}

// Counter-based DPLL. For every clause we track how many of its literals are
// true and how many are unassigned; an unsatisfied clause is "active" and
// contributes, for each of its unassigned literals m, one count to
// lit_active[m] (pure-literal detection) and one count to
// occ_by_size[free][var m] (branching heuristic).
//
// Backtracking is conflict-directed: a conflict is traced through unit
// reasons to the set of decision levels it depends on, and the search jumps
// to the deepest of them. Nothing is learned; the level set of a refuted
// branch is only kept as the reason of the flipped decision.
class Dpll
{
  public:
	Dpll(std::size_t num_vars, const std::vector<Codes> &clauses,
	     std::uint64_t budget)
	    : nv_(num_vars), budget_(budget), value_(nv_, unassigned),
	      level_(nv_, 0), reason_(nv_), seen_(nv_, 0), occurs_(2 * nv_),
	      lit_active_(2 * nv_, 0)
	{
		std::size_t max_len = 0;
		for (const auto &c : clauses)
		{
			start_.push_back(static_cast<std::uint32_t>(lits_.size()));
			for (auto l : c)
			{
				occurs_[l].push_back(static_cast<std::uint32_t>(len_.size()));
				lits_.push_back(l);
			}
			len_.push_back(static_cast<std::uint32_t>(c.size()));
			max_len = std::max(max_len, c.size());
		}
		auto m = len_.size();
		sat_count_.assign(m, 0);
		free_count_ = len_;
		size_count_.assign(max_len + 1, 0);
		occ_by_size_.assign((max_len + 1) * nv_, 0);

		for (std::uint32_t c = 0; c < m; ++c)
		{
			++size_count_[len_[c]];
			for (auto l : clause(c))
			{
				++lit_active_[l];
				++occ(len_[c], l >> 1);
			}
			if (len_[c] == 1)
				units_.push_back(c);
		}
		for (std::uint32_t v = 0; v < nv_; ++v)
			pure_.push_back(v);
	}

	SolveResult run(bool empty_clause)
	{
		auto t0 = Clock::now();
		SolveResult res;
		res.verdict = empty_clause ? Verdict::unsat : search();
		if (res.verdict == Verdict::sat)
		{
			res.witness.resize(nv_);
			for (std::size_t v = 0; v < nv_; ++v)
				res.witness[v] = value_[v] == 1 ? 1 : 0;
		}
		stats_.preprocessing =
		    res.verdict != Verdict::budget_exceeded && stats_.decisions == 0;
		stats_.wall = Clock::now() - t0;
		res.stats = stats_;
		return res;
	}

  private:
	static constexpr std::int8_t unassigned = -1;
	static constexpr std::uint32_t no_clause = static_cast<std::uint32_t>(-1);

	enum class Why : std::uint8_t
	{
		decision,
		flipped,
		unit,
		pure,
		probe, // level 0 only: the complement failed under propagation
	};

	struct Reason
	{
		Why why = Why::decision;
		std::uint32_t clause = no_clause;
	};

	struct Level
	{
		std::size_t trail_pos;
		std::uint32_t lit;
		bool flipped;
		// Decision levels that refuted `lit`; the flipped literal rests on them.
		std::vector<std::uint32_t> refuted_by;
	};

	std::span<const std::uint32_t> clause(std::uint32_t c) const
	{
		return {lits_.data() + start_[c], len_[c]};
	}
	std::uint32_t &occ(std::size_t size, std::uint32_t var)
	{
		return occ_by_size_[size * nv_ + var];
	}
	bool is_free(std::uint32_t lit) const { return value_[lit >> 1] == unassigned; }
	bool conflict() const { return size_count_[0] != 0; }
	std::uint32_t current_level() const
	{
		return static_cast<std::uint32_t>(levels_.size());
	}

	void drop_active(std::uint32_t lit)
	{
		if (--lit_active_[lit] == 0)
			pure_.push_back(lit >> 1);
	}

	void assign(std::uint32_t lit, Reason why)
	{
		auto var = lit >> 1;
		value_[var] = static_cast<std::int8_t>((lit & 1u) ? 0 : 1);
		level_[var] = current_level();
		reason_[var] = why;
		trail_.push_back(lit);

		for (auto c : occurs_[lit])
		{
			if (sat_count_[c]++ == 0)
			{
				auto s = free_count_[c];
				--size_count_[s];
				for (auto m : clause(c))
					if (is_free(m) || m == lit)
					{
						drop_active(m);
						--occ(s, m >> 1);
					}
			}
			--free_count_[c];
		}
		auto nlit = lit ^ 1u;
		for (auto c : occurs_[nlit])
		{
			auto s = free_count_[c]--;
			if (sat_count_[c] != 0)
				continue;
			--size_count_[s];
			++size_count_[s - 1];
			drop_active(nlit);
			--occ(s, var);
			for (auto m : clause(c))
				if (is_free(m))
				{
					--occ(s, m >> 1);
					++occ(s - 1, m >> 1);
				}
			if (s - 1 == 1)
				units_.push_back(c);
			else if (s - 1 == 0 && conflict_clause_ == no_clause)
				conflict_clause_ = c;
		}
	}

	void unassign(std::uint32_t lit)
	{
		auto var = lit >> 1;
		auto nlit = lit ^ 1u;
		for (auto c : occurs_[nlit])
		{
			auto s = free_count_[c]++;
			if (sat_count_[c] != 0)
				continue;
			--size_count_[s];
			++size_count_[s + 1];
			++lit_active_[nlit];
			++occ(s + 1, var);
			for (auto m : clause(c))
				if (is_free(m))
				{
					--occ(s, m >> 1);
					++occ(s + 1, m >> 1);
				}
		}
		for (auto c : occurs_[lit])
		{
			++free_count_[c];
			if (--sat_count_[c] == 0)
			{
				auto s = free_count_[c];
				++size_count_[s];
				for (auto m : clause(c))
					if (is_free(m) || m == lit)
					{
						++lit_active_[m];
						++occ(s, m >> 1);
					}
			}
		}
		value_[var] = unassigned;
	}

	// Unit propagation, then pure literals, to fixpoint or conflict.
	void propagate()
	{
		while (!conflict())
		{
			if (!units_.empty())
			{
				auto c = units_.back();
				units_.pop_back();
				if (sat_count_[c] != 0 || free_count_[c] != 1)
					continue;
				for (auto m : clause(c))
					if (is_free(m))
					{
						assign(m, {Why::unit, c});
						++stats_.propagations;
						break;
					}
				continue;
			}
			if (!pure_.empty())
			{
				auto v = pure_.back();
				pure_.pop_back();
				if (value_[v] != unassigned)
					continue;
				auto p = lit_active_[2 * v], n = lit_active_[2 * v + 1];
				if ((p == 0) == (n == 0))
					continue;
				assign(p == 0 ? 2 * v + 1 : 2 * v, {Why::pure, no_clause});
				++stats_.propagations;
				continue;
			}
			break;
		}
	}

	void undo_to(std::size_t pos)
	{
		while (trail_.size() > pos)
		{
			unassign(trail_.back());
			trail_.pop_back();
		}
		units_.clear();
		pure_.clear();
		conflict_clause_ = no_clause;
	}

	// Returns the literal to branch on (false polarity), or none when every
	// clause is satisfied.
	std::optional<std::uint32_t> choose() const
	{
		std::size_t s = 1;
		while (s < size_count_.size() && size_count_[s] == 0)
			++s;
		if (s == size_count_.size())
			return std::nullopt;
		const auto *row = occ_by_size_.data() + s * nv_;
		std::uint32_t best = 0, best_count = 0;
		for (std::uint32_t v = 0; v < nv_; ++v)
			if (row[v] > best_count)
			{
				best_count = row[v];
				best = v;
			}
		return 2 * best + 1;
	}

	// Decision levels the current conflict depends on, ascending. Pure
	// literals never occur falsified in a reason or conflicting clause (the
	// clauses mentioning their complement are already satisfied), so the
	// trace only meets decisions, flipped decisions and units.
	std::vector<std::uint32_t> conflict_levels()
	{
		std::vector<char> in_set(levels_.size() + 1, 0);
		std::vector<std::uint32_t> todo, touched;
		for (auto m : clause(conflict_clause_))
			todo.push_back(m >> 1);
		while (!todo.empty())
		{
			auto v = todo.back();
			todo.pop_back();
			if (seen_[v])
				continue;
			seen_[v] = 1;
			touched.push_back(v);
			auto lvl = level_[v];
			if (lvl == 0)
				continue;
			const auto &r = reason_[v];
			switch (r.why)
			{
			case Why::unit:
				for (auto m : clause(r.clause))
					if ((m >> 1) != v)
						todo.push_back(m >> 1);
				break;
			case Why::flipped:
				for (auto l : levels_[lvl - 1].refuted_by)
					in_set[l] = 1;
				break;
			case Why::decision:
			case Why::pure:
			case Why::probe:
				in_set[lvl] = 1;
				break;
			}
		}
		for (auto v : touched)
			seen_[v] = 0;
		std::vector<std::uint32_t> out;
		for (std::uint32_t l = 1; l < in_set.size(); ++l)
			if (in_set[l])
				out.push_back(l);
		return out;
	}

	// Jumps to the deepest decision the conflict depends on and flips it.
	// False when the conflict depends on no decision at all.
	bool backjump()
	{
		while (conflict())
		{
			auto set = conflict_levels();
			if (set.empty())
				return false;
			auto target = set.back();
			set.pop_back();
			++stats_.backtracks;
			undo_to(levels_[target - 1].trail_pos);
			levels_.resize(target);
			auto &top = levels_.back();
			top.flipped = true;
			top.refuted_by = std::move(set);
			assign(top.lit ^ 1u, {Why::flipped, no_clause});
			propagate();
		}
		return true;
	}

	// True when propagating `lit` on top of the current assignment conflicts.
	bool fails(std::uint32_t lit)
	{
		auto pos = trail_.size();
		assign(lit, {Why::decision, no_clause});
		propagate();
		bool bad = conflict();
		undo_to(pos);
		return bad;
	}

	// Failed-literal probing at level 0, repeated until a full pass fixes
	// nothing. False when both polarities of some variable fail.
	bool probe()
	{
		for (bool changed = true; changed;)
		{
			changed = false;
			for (std::uint32_t v = 0; v < nv_; ++v)
				for (std::uint32_t lit : {2 * v + 1, 2 * v})
				{
					if (value_[v] != unassigned ||
					    (lit_active_[2 * v] == 0 && lit_active_[2 * v + 1] == 0))
						break;
					if (!fails(lit))
						continue;
					assign(lit ^ 1u, {Why::probe, no_clause});
					++stats_.propagations;
					propagate();
					if (conflict())
						return false;
					changed = true;
				}
		}
		return true;
	}

	Verdict search()
	{
		propagate();
		if (conflict() || !probe())
			return Verdict::unsat;
		while (true)
		{
			auto lit = choose();
			if (!lit)
				return Verdict::sat;
			if (stats_.decisions >= budget_)
				return Verdict::budget_exceeded;
			++stats_.decisions;
			levels_.push_back({trail_.size(), *lit, false, {}});
			assign(*lit, {Why::decision, no_clause});
			propagate();
			if (conflict() && !backjump())
				return Verdict::unsat;
		}
	}

	std::size_t nv_;
	std::uint64_t budget_;
	std::vector<std::int8_t> value_;
	std::vector<std::uint32_t> level_;
	std::vector<Reason> reason_;
	std::vector<char> seen_;
	std::vector<std::uint32_t> lits_, start_, len_;
	std::vector<std::vector<std::uint32_t>> occurs_;
	std::vector<std::uint32_t> sat_count_, free_count_;
	std::vector<std::uint32_t> lit_active_;
	std::vector<std::uint32_t> size_count_;
	std::vector<std::uint32_t> occ_by_size_;
	std::vector<std::uint32_t> trail_;
	std::vector<Level> levels_;
	std::vector<std::uint32_t> units_;
	std::vector<std::uint32_t> pure_;
	std::uint32_t conflict_clause_ = no_clause;
	SolveStats stats_;
};

} // namespace

SolveResult dpll(const CnfFormula &cnf, std::uint64_t budget)
{
	auto start = Clock::now();
	std::vector<Codes> clauses;
	clauses.reserve(cnf.clauses.size());
	for (const auto &c : cnf.clauses)
	{
		Codes codes;
		for (auto l : c)
			codes.push_back(l.code());
		clauses.push_back(std::move(codes));
	}
	auto closed = cnf.has_empty_clause ? std::nullopt
	                                   : merge_closure(std::move(clauses));
	if (!closed)
	{
		SolveResult res;
		res.stats.preprocessing = true;
		res.stats.wall = Clock::now() - start;
		return res;
	}
	Dpll solver(cnf.num_vars, *closed, budget);
	auto res = solver.run(false);
	res.stats.wall = Clock::now() - start;
	return res;
}

} // namespace nkland
