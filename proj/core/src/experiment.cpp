#include "nkland/experiment.hpp"

#include "nkland/cnf.hpp"
#include "nkland/error.hpp"
#include "nkland/structure.hpp"
#include "nkland/two_sat.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace nkland {

const char *to_string(Stage s)
{
	switch (s)
	{
	case Stage::all_zero:
		return "all_zero";
	case Stage::conflicting_pair:
		return "conflicting_pair";
	case Stage::two_sat:
		return "two_sat";
	case Stage::dpll_preprocessing:
		return "dpll_preprocessing";
	case Stage::dpll_search:
		return "dpll_search";
	case Stage::undecided:
		return "undecided";
	}
	return "?";
}

bool TrialRecord::insoluble() const
{
	return all_zero_function || conflicting_pair || two_sat_unsat ||
	       full_verdict == Verdict::unsat;
}

bool TrialRecord::decided_without_search() const
{
	return decided_by != Stage::dpll_search && decided_by != Stage::undecided;
}

bool TrialRecord::consistent() const
{
	if (!full_verdict || *full_verdict == Verdict::budget_exceeded)
		return true;
	bool early = all_zero_function || conflicting_pair || two_sat_unsat;
	return !early || *full_verdict == Verdict::unsat;
}

TrialRecord run_trial(const GenParams &params, const TrialOptions &options)
{
	TrialRecord rec;
	rec.params = params;

	NKInstance inst;
	try
	{
		inst = generate(params);
	}
	catch (const Error &e)
	{
		rec.error = e.what();
		return rec;
	}
	rec.digest = digest(inst);

	auto decide = [&](Stage s) {
		if (rec.decided_by == Stage::undecided)
			rec.decided_by = s;
	};
	auto stop_early = [&] {
		return !options.full_stats && rec.decided_by != Stage::undecided;
	};

	rec.all_zero_function = find_all_zero_function(inst);
	if (rec.all_zero_function)
		decide(Stage::all_zero);
	if (stop_early())
		return rec;

	rec.conflicting_pair = find_conflicting_pair(inst);
	if (rec.conflicting_pair)
		decide(Stage::conflicting_pair);
	if (stop_early())
		return rec;

	{
		auto t0 = std::chrono::steady_clock::now();
		auto sub = extract_two_sat(inst);
		auto res = solve_two_sat(sub);
		rec.two_sat_ran = true;
		rec.two_sat_clauses = sub.size();
		rec.two_sat_unsat = !res.satisfiable;
		rec.two_sat_stats.wall = std::chrono::steady_clock::now() - t0;
		rec.two_sat_stats.preprocessing = true;
		if (rec.two_sat_unsat)
			decide(Stage::two_sat);
	}
	if (stop_early())
		return rec;

	auto cnf = nk_to_cnf(inst);
	rec.full_clauses = cnf.size();
	auto res = dpll(cnf, options.budget);
	rec.full_verdict = res.verdict;
	rec.full_stats = res.stats;
	if (res.verdict != Verdict::budget_exceeded)
		decide(res.stats.preprocessing ? Stage::dpll_preprocessing
		                               : Stage::dpll_search);
	return rec;
}

std::uint64_t trial_seed(std::uint64_t root, std::size_t n, double value,
                         std::size_t index)
{
	auto key = static_cast<std::uint64_t>(std::llround(value * 1e6));
	return derive_seed(root, {n, key, index});
}

GenParams cell_params(const SweepGrid &grid, std::size_t n, double value,
                      std::size_t index)
{
	GenParams p;
	p.n = n;
	p.k = grid.k;
	if (grid.parameter == SweepParameter::z)
		p.model = FixedRatioModel{value};
	else
		p.model = UniformModel{value};
	p.seed = trial_seed(grid.root_seed, n, value, index);
	return p;
}

namespace {

double parse_double(const std::string &s)
{
	std::size_t used = 0;
	double v = 0;
	try
	{
		v = std::stod(s, &used);
	}
	catch (const std::exception &)
	{
		used = 0;
	}
	if (used == 0 || used != s.size())
		throw InvalidParameters("not a number: '" + s + "'");
	return v;
}

std::vector<std::string> split(const std::string &s, char sep)
{
	std::vector<std::string> out;
	std::stringstream ss(s);
	std::string item;
	while (std::getline(ss, item, sep))
		out.push_back(item);
	return out;
}

double round9(double v) { return std::round(v * 1e9) / 1e9; }

} // namespace

std::vector<double> parse_value_grid(const std::string &text)
{
	std::vector<double> out;
	if (text.find(':') != std::string::npos)
	{
		auto parts = split(text, ':');
		if (parts.size() != 3)
			throw InvalidParameters("range must be start:end:step");
		auto a = parse_double(parts[0]), b = parse_double(parts[1]),
		     step = parse_double(parts[2]);
		if (!(step > 0) || b < a)
			throw InvalidParameters("range needs step > 0 and end >= start");
		auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
		for (std::size_t i = 0; i < count; ++i)
			out.push_back(round9(a + static_cast<double>(i) * step));
	}
	else
		for (const auto &item : split(text, ','))
			out.push_back(parse_double(item));
	if (out.empty())
		throw InvalidParameters("empty value grid");
	return out;
}

std::vector<std::size_t> parse_size_list(const std::string &text)
{
	std::vector<std::size_t> out;
	for (const auto &item : split(text, ','))
	{
		auto v = parse_double(item);
		if (v < 1 || v != std::floor(v))
			throw InvalidParameters("not a positive integer: '" + item + "'");
		out.push_back(static_cast<std::size_t>(v));
	}
	if (out.empty())
		throw InvalidParameters("empty size list");
	return out;
}

std::optional<double>
crossing_point(const std::vector<std::pair<double, double>> &points)
{
	for (std::size_t i = 0; i < points.size(); ++i)
	{
		auto [v1, f1] = points[i];
		if (f1 < 0.5)
			continue;
		if (i == 0)
			return v1;
		auto [v0, f0] = points[i - 1];
		return v0 + (0.5 - f0) * (v1 - v0) / (f1 - f0);
	}
	return std::nullopt;
}

namespace {

double median(std::vector<double> xs)
{
	if (xs.empty())
		return 0.0;
	std::sort(xs.begin(), xs.end());
	auto m = xs.size() / 2;
	return xs.size() % 2 ? xs[m] : (xs[m - 1] + xs[m]) / 2.0;
}

double param_value(const GenParams &p)
{
	if (auto *u = std::get_if<UniformModel>(&p.model))
		return u->p;
	return std::get<FixedRatioModel>(p.model).z;
}

std::vector<double> sorted_unique(std::vector<double> v)
{
	std::sort(v.begin(), v.end());
	v.erase(std::unique(v.begin(), v.end()), v.end());
	return v;
}

} // namespace

SweepSummary summarize(const SweepGrid &grid,
                       const std::vector<TrialRecord> &records)
{
	SweepSummary s;
	s.parameter = grid.parameter;

	std::map<std::pair<std::size_t, std::int64_t>, std::vector<const TrialRecord *>>
	    cells;
	for (const auto &r : records)
		cells[{r.params.n, std::llround(param_value(r.params) * 1e6)}].push_back(&r);

	for (const auto &[key, recs] : cells)
	{
		CellSummary c;
		c.n = key.first;
		c.value = param_value(recs.front()->params);
		c.trials = recs.size();
		std::size_t sub = 0;
		std::vector<double> decisions;
		for (const auto *r : recs)
		{
			if (r->insoluble())
			{
				++c.insoluble;
				if (r->decided_without_search())
					++c.insoluble_without_search;
			}
			sub += r->two_sat_unsat;
			c.conflicting_pairs += r->conflicting_pair.has_value();
			c.inconsistent += !r->consistent();
			if (r->full_verdict)
			{
				decisions.push_back(static_cast<double>(r->full_stats.decisions));
				c.budget_exceeded += *r->full_verdict == Verdict::budget_exceeded;
			}
		}
		auto t = static_cast<double>(c.trials);
		c.frac_insoluble_full = static_cast<double>(c.insoluble) / t;
		c.frac_insoluble_2sat = static_cast<double>(sub) / t;
		if (!decisions.empty())
		{
			double sum = 0;
			for (auto d : decisions)
				sum += d;
			c.mean_decisions = sum / static_cast<double>(decisions.size());
			c.median_decisions = median(decisions);
			c.sqrt_mean_decisions = std::sqrt(c.mean_decisions);
		}
		s.cells.push_back(c);
	}

	std::map<std::size_t, std::vector<std::pair<double, double>>> full, two;
	for (const auto &c : s.cells)
	{
		full[c.n].push_back({c.value, c.frac_insoluble_full});
		two[c.n].push_back({c.value, c.frac_insoluble_2sat});
	}
	for (const auto &[n, pts] : full)
		s.crossing_full[n] = crossing_point(pts);
	for (const auto &[n, pts] : two)
		s.crossing_2sat[n] = crossing_point(pts);
	return s;
}

std::size_t effective_workers(std::size_t requested)
{
	std::size_t w = requested ? requested : std::thread::hardware_concurrency();
	if (const char *env = std::getenv("NKLAND_WORKERS"))
	{
		char *end = nullptr;
		auto cap = std::strtoul(env, &end, 10);
		if (end != env && cap > 0)
			w = std::min<std::size_t>(w, cap);
	}
	return std::max<std::size_t>(w, 1);
}

SweepResult sweep(const SweepGrid &grid, const SweepOptions &options)
{
	if (grid.ns.empty() || grid.values.empty() || grid.trials == 0)
		throw InvalidParameters("sweep grid is empty");

	auto ns = grid.ns;
	std::sort(ns.begin(), ns.end());
	ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
	auto values = sorted_unique(grid.values);
	auto workers = std::min(effective_workers(options.workers), grid.trials);

	SweepResult result;
	for (auto n : ns)
		for (auto v : values)
		{
			std::vector<TrialRecord> cell(grid.trials);
			std::atomic<std::size_t> next{0};
			auto work = [&] {
				for (auto i = next++; i < grid.trials; i = next++)
				{
					cell[i] = run_trial(cell_params(grid, n, v, i), options.trial);
					cell[i].trial = i;
				}
			};
			if (workers <= 1)
				work();
			else
			{
				std::vector<std::jthread> pool;
				for (std::size_t w = 0; w < workers; ++w)
					pool.emplace_back(work);
			}
			if (options.on_cell)
				options.on_cell(cell);
			result.records.insert(result.records.end(),
			                      std::make_move_iterator(cell.begin()),
			                      std::make_move_iterator(cell.end()));
		}
	result.summary = summarize(grid, result.records);
	return result;
}

} // namespace nkland
