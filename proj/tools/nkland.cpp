// nkland: generate, reduce, analyze and solve NK landscape decision
// instances, and run solubility sweeps.

#include "nkland/cnf.hpp"
#include "nkland/error.hpp"
#include "nkland/experiment.hpp"
#include "nkland/generator.hpp"
#include "nkland/instance_json.hpp"
#include "nkland/monte_carlo.hpp"
#include "nkland/report.hpp"
#include "nkland/solver.hpp"
#include "nkland/structure.hpp"
#include "nkland/two_sat.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace nkland;
using nlohmann::json;

namespace {

void write_text(const std::string &path, const std::string &text)
{
	if (path.empty() || path == "-")
	{
		std::cout << text;
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw Error("cannot open " + path + " for writing");
	out << text;
	if (!out)
		throw Error("write failed: " + path);
}

std::string read_text(const std::string &path)
{
	if (path == "-")
	{
		std::stringstream ss;
		ss << std::cin.rdbuf();
		return ss.str();
	}
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw Error("cannot open " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

json stats_json(const SolveStats &s)
{
	return {{"decisions", s.decisions},
	        {"propagations", s.propagations},
	        {"backtracks", s.backtracks},
	        {"wall_seconds", std::chrono::duration<double>(s.wall).count()},
	        {"preprocessing", s.preprocessing}};
}

json reason_json(const InsolubleReason &r)
{
	return std::visit(
	    [](const auto &x) -> json {
		    using T = std::decay_t<decltype(x)>;
		    if constexpr (std::is_same_v<T, AllZeroFunction>)
			    return {{"kind", "all-zero-function"}, {"function", x.function}};
		    else if constexpr (std::is_same_v<T, ConflictingPair>)
			    return {{"kind", "conflicting-pair"},
			            {"functions", {x.first, x.second}}};
		    else if constexpr (std::is_same_v<T, ComponentUnsat>)
			    return {{"kind", "component-unsat"}, {"component", x.component}};
		    else
			    return {{"kind", "solver-unsat"}};
	    },
	    r);
}

struct GenerateArgs
{
	std::size_t n = 0, k = 2;
	std::string model = "fixed-ratio";
	double p = -1, z = -1;
	std::uint64_t seed = 0;
	std::string out = "-";
};

struct AnalyzeArgs
{
	std::string in;
	std::string report = "all";
	std::size_t cap = kDefaultComponentCap;
};

struct SweepArgs
{
	std::size_t k = 2;
	std::string ns = "512,1024,2048,4096";
	std::string z, p;
	std::size_t trials = 100;
	std::uint64_t seed = 0;
	std::string out = "sweep-out";
	std::size_t workers = 0;
	std::uint64_t budget = kDefaultDecisionBudget;
	bool fast = false;
	bool svg = false;
};

struct McArgs
{
	std::string which = "all-zero";
	std::uint64_t samples = 0;
	std::uint64_t seed = 1;
	double p = 0.3;
	std::size_t n = 50;
	std::size_t k = 2;
	double alpha = 0.5;
};

int run_generate(const GenerateArgs &a)
{
	GenParams params;
	params.n = a.n;
	params.k = a.k;
	params.seed = a.seed;
	if (a.model == "uniform")
	{
		if (a.p < 0)
			throw InvalidParameters("--p is required for the uniform model");
		params.model = UniformModel{a.p};
	}
	else
	{
		if (a.z < 0)
			throw InvalidParameters("--z is required for the fixed-ratio model");
		params.model = FixedRatioModel{a.z};
	}
	write_text(a.out, to_json(generate(params)) + "\n");
	return 0;
}

int run_reduce(const std::string &in, const std::string &out)
{
	auto inst = instance_from_json(read_text(in));
	if (auto v = validate(inst); !v.empty())
		throw Error("invalid instance: " + v.front().message);
	write_text(out, to_dimacs(nk_to_cnf(inst)));
	return 0;
}

int run_analyze(const AnalyzeArgs &a)
{
	auto inst = instance_from_json(read_text(a.in));
	json report = {{"n", inst.n}, {"k", inst.k}};
	auto violations = validate(inst);
	if (!violations.empty())
	{
		json vs = json::array();
		for (const auto &v : violations)
			vs.push_back(v.message);
		report["violations"] = vs;
		std::cout << report.dump(2) << '\n';
		return 1;
	}

	bool all = a.report == "all";
	if (all || a.report == "components")
	{
		auto graph = build_connection_graph(inst);
		auto dec = components(inst, graph);
		auto zero = find_all_zero_function(inst);
		report["all_zero_function"] = zero ? json(*zero) : json(nullptr);
		report["edges"] = graph.edge_count();
		report["components"] = {
		    {"count", dec.stats.count},
		    {"M", dec.stats.max_variables},
		    {"max_vertices", dec.stats.max_vertices},
		    {"variable_sizes", dec.stats.variable_sizes},
		    {"vertex_sizes", dec.stats.vertex_sizes}};
		try
		{
			auto s = decompose_solve(inst, a.cap);
			report["decomposition"] =
			    s.soluble ? json{{"verdict", "soluble"}, {"witness", s.witness}}
			              : json{{"verdict", "insoluble"},
			                     {"reason", reason_json(s.reason)}};
		}
		catch (const CapacityExceeded &e)
		{
			report["decomposition"] = {{"verdict", "capacity-exceeded"},
			                           {"component", e.component()},
			                           {"size", e.size()}};
		}
	}
	if (all || a.report == "conflicts")
	{
		auto pair = find_conflicting_pair(inst);
		report["conflicting_pair"] =
		    pair ? json::array({pair->first, pair->second}) : json(nullptr);
	}
	if (all || a.report == "twosat")
	{
		auto sub = extract_two_sat(inst);
		auto res = solve_two_sat(sub);
		report["twosat"] = {
		    {"clauses", sub.size()},
		    {"empty_clause", sub.has_empty_clause},
		    {"verdict", res.satisfiable ? "SAT" : "UNSAT"},
		    {"contradictory_var", res.contradictory_var
		                              ? json(*res.contradictory_var)
		                              : json(nullptr)}};
	}
	std::cout << report.dump(2) << '\n';
	return 0;
}

int run_module(std::size_t p, const std::string &out, bool projection)
{
	auto m = build_t3_module(p);
	write_text(out, to_dimacs(projection ? m.projection : m.clauses));
	return 0;
}

int run_solve(const std::string &in, std::uint64_t budget,
              const std::string &stats_path)
{
	auto cnf = parse_dimacs(read_text(in));
	auto res = dpll(cnf, budget);
	switch (res.verdict)
	{
	case Verdict::sat:
	{
		std::cout << "s SATISFIABLE\nv";
		for (std::size_t v = 0; v < res.witness.size(); ++v)
			std::cout << ' ' << (res.witness[v] ? "" : "-") << v + 1;
		std::cout << " 0\n";
		break;
	}
	case Verdict::unsat:
		std::cout << "s UNSATISFIABLE\n";
		break;
	case Verdict::budget_exceeded:
		std::cout << "s UNKNOWN\n";
		break;
	}
	if (!stats_path.empty())
	{
		auto j = stats_json(res.stats);
		j["verdict"] = to_string(res.verdict);
		j["variables"] = cnf.num_vars;
		j["clauses"] = cnf.size();
		write_text(stats_path, j.dump(2) + "\n");
	}
	return res.verdict == Verdict::sat     ? 10
	       : res.verdict == Verdict::unsat ? 20
	                                       : 0;
}

int run_sweep(const SweepArgs &a)
{
	if (a.z.empty() == a.p.empty())
		throw InvalidParameters("give exactly one of --z or --p");
	SweepGrid grid;
	grid.k = a.k;
	grid.parameter = a.z.empty() ? SweepParameter::p : SweepParameter::z;
	grid.ns = parse_size_list(a.ns);
	grid.values = parse_value_grid(a.z.empty() ? a.p : a.z);
	grid.trials = a.trials;
	grid.root_seed = a.seed;

	std::filesystem::path dir(a.out);
	std::filesystem::create_directories(dir);
	auto trials_path = dir / "trials.jsonl";
	std::ofstream trials(trials_path, std::ios::binary | std::ios::trunc);
	if (!trials)
		throw Error("cannot open " + trials_path.string() + " for writing");

	SweepOptions opts;
	opts.workers = a.workers;
	opts.trial.full_stats = !a.fast;
	opts.trial.budget = a.budget;
	std::vector<TrialRecord> so_far;
	opts.on_cell = [&](const std::vector<TrialRecord> &cell) {
		for (const auto &r : cell)
			trials << trial_json(r) << '\n';
		trials.flush();
		so_far.insert(so_far.end(), cell.begin(), cell.end());
		write_report(dir, grid, summarize(grid, so_far), false);
		auto c = summarize(grid, cell).cells.front();
		std::cerr << "n=" << c.n << " value=" << c.value
		          << " insoluble=" << c.frac_insoluble_full
		          << " 2sat=" << c.frac_insoluble_2sat
		          << " median_decisions=" << c.median_decisions << '\n';
	};
	auto result = sweep(grid, opts);
	write_report(dir, grid, result.summary, a.svg);

	for (const auto &[n, x] : result.summary.crossing_full)
	{
		const auto &x2 = result.summary.crossing_2sat.at(n);
		std::cout << "n=" << n << " crossing_full="
		          << (x ? std::to_string(*x) : "none") << " crossing_2sat="
		          << (x2 ? std::to_string(*x2) : "none") << '\n';
	}
	return 0;
}

int run_mc(const McArgs &a)
{
	std::vector<McReport> reports;
	auto samples = [&](std::uint64_t fallback) {
		return a.samples ? a.samples : fallback;
	};
	if (a.which == "all-zero")
		reports.push_back(mc_check_all_zero(a.p, a.n, a.k, samples(100'000), a.seed));
	else if (a.which == "conflict")
	{
		reports.push_back(mc_check_conflict(samples(10'000'000), a.seed, true));
		reports.push_back(mc_check_conflict(samples(10'000'000) / 10, a.seed, false));
	}
	else if (a.which == "module")
	{
		reports.push_back(mc_check_module_prob(a.alpha, samples(1'000'000), a.seed));
		reports.push_back(mc_check_collision(a.n, samples(1'000'000), a.seed));
	}
	else
		throw InvalidParameters("unknown check '" + a.which + "'");

	bool ok = true;
	for (const auto &r : reports)
	{
		std::cout << to_json(r) << '\n';
		ok &= r.within();
	}
	return ok ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"NK landscape decision problems: generation, SAT reduction, "
	             "structural detectors and solubility sweeps"};
	app.require_subcommand(1);

	GenerateArgs gen;
	auto *g = app.add_subcommand("generate", "Generate a random instance (JSON)");
	g->add_option("--n", gen.n, "Number of variables")->required();
	g->add_option("--k", gen.k, "Neighbourhood size");
	g->add_option("--model", gen.model, "uniform | fixed-ratio")
	    ->check(CLI::IsMember({"uniform", "fixed-ratio"}));
	g->add_option("--p", gen.p, "Zero probability (uniform model)");
	g->add_option("--z", gen.z, "Zero rows per table (fixed-ratio model)");
	g->add_option("--seed", gen.seed, "Root seed");
	g->add_option("--out", gen.out, "Output file (default stdout)");

	std::string red_in, red_out = "-";
	auto *r = app.add_subcommand("reduce", "Reduce an instance to DIMACS CNF");
	r->add_option("--in", red_in, "Instance JSON")->required();
	r->add_option("--out", red_out, "Output file (default stdout)");

	AnalyzeArgs an;
	auto *a = app.add_subcommand("analyze", "Structural report (JSON)");
	a->add_option("--in", an.in, "Instance JSON")->required();
	a->add_option("--report", an.report, "components | conflicts | twosat | all")
	    ->check(CLI::IsMember({"components", "conflicts", "twosat", "all"}));
	a->add_option("--cap", an.cap, "Component brute-force cap (variables)");

	std::size_t mod_p = 1;
	std::string mod_out = "-";
	bool mod_proj = false;
	auto *m = app.add_subcommand("module", "Write a t-3-module as DIMACS");
	m->add_option("--p", mod_p, "Module parameter (t = 3p + 2)")->required();
	m->add_option("--out", mod_out, "Output file (default stdout)");
	m->add_flag("--projection", mod_proj, "Write the 2-SAT projection instead");

	std::string solve_in, solve_stats;
	std::uint64_t solve_budget = kDefaultDecisionBudget;
	auto *s = app.add_subcommand("solve", "Solve a DIMACS CNF with DPLL");
	s->add_option("--in", solve_in, "DIMACS file ('-' for stdin)")->required();
	s->add_option("--budget", solve_budget, "Decision budget");
	s->add_option("--stats", solve_stats, "Write solver statistics (JSON)");

	SweepArgs sw;
	auto *w = app.add_subcommand("sweep", "Solubility sweep over (n, z) or (n, p)");
	w->add_option("--k", sw.k, "Neighbourhood size");
	w->add_option("--n", sw.ns, "Comma-separated instance sizes");
	w->add_option("--z", sw.z, "z grid: start:end:step or comma list");
	w->add_option("--p", sw.p, "p grid (uniform model): start:end:step or list");
	w->add_option("--trials", sw.trials, "Trials per cell");
	w->add_option("--seed", sw.seed, "Root seed");
	w->add_option("--out", sw.out, "Output directory");
	w->add_option("--workers", sw.workers, "Worker threads (NKLAND_WORKERS caps)");
	w->add_option("--budget", sw.budget, "DPLL decision budget per trial");
	w->add_flag("--fast", sw.fast, "Skip later stages once insolubility is known");
	w->add_flag("--svg", sw.svg, "Also write fractions.svg");

	McArgs mc;
	auto *c = app.add_subcommand("mc-check", "Monte Carlo checks of closed forms");
	c->add_option("--which", mc.which, "all-zero | conflict | module")
	    ->check(CLI::IsMember({"all-zero", "conflict", "module"}));
	c->add_option("--samples", mc.samples, "Number of samples");
	c->add_option("--seed", mc.seed, "Seed");
	c->add_option("--p", mc.p, "Zero probability (all-zero)");
	c->add_option("--n", mc.n, "Instance size (all-zero, collision)");
	c->add_option("--k", mc.k, "Neighbourhood size (all-zero)");
	c->add_option("--alpha", mc.alpha, "Fractional part of z (module)");

	CLI11_PARSE(app, argc, argv);

	try
	{
		if (*g)
			return run_generate(gen);
		if (*r)
			return run_reduce(red_in, red_out);
		if (*a)
			return run_analyze(an);
		if (*m)
			return run_module(mod_p, mod_out, mod_proj);
		if (*s)
			return run_solve(solve_in, solve_budget, solve_stats);
		if (*w)
			return run_sweep(sw);
		if (*c)
			return run_mc(mc);
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
	return 0;
}
