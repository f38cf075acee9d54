#include "nkland/report.hpp"

#include "nkland/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace nkland {

using nlohmann::json;

namespace {

constexpr const char *kVersion = "0.1.0";

std::string num(double v)
{
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.10g", v);
	return buf;
}

const char *param_name(SweepParameter p)
{
	return p == SweepParameter::z ? "z" : "p";
}

json optional_number(const std::optional<double> &v)
{
	return v ? json(*v) : json(nullptr);
}

void write_file(const std::filesystem::path &path, const std::string &text)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw Error("cannot open " + path.string() + " for writing");
	out << text;
	out.flush();
	if (!out)
		throw Error("write failed: " + path.string());
}

} // namespace

std::string csv_header(SweepParameter parameter)
{
	return std::string("n,") + param_name(parameter) +
	       ",trials,frac_insoluble_full,frac_insoluble_2sat,mean_decisions,"
	       "median_decisions,sqrt_mean_decisions";
}

void write_csv(const SweepSummary &summary, std::ostream &out)
{
	out << csv_header(summary.parameter) << '\n';
	for (const auto &c : summary.cells)
		out << c.n << ',' << num(c.value) << ',' << c.trials << ','
		    << num(c.frac_insoluble_full) << ',' << num(c.frac_insoluble_2sat)
		    << ',' << num(c.mean_decisions) << ',' << num(c.median_decisions)
		    << ',' << num(c.sqrt_mean_decisions) << '\n';
}

std::string to_csv(const SweepSummary &summary)
{
	std::ostringstream ss;
	write_csv(summary, ss);
	return ss.str();
}

std::string metadata_json(const SweepGrid &grid, const SweepSummary &summary)
{
	json crossings = json::object();
	for (const auto &[n, x] : summary.crossing_full)
		crossings[std::to_string(n)] = {
		    {"full", optional_number(x)},
		    {"two_sat", optional_number(summary.crossing_2sat.at(n))}};
	json j = {
	    {"tool", "nkland"},
	    {"version", kVersion},
	    {"grid",
	     {{"k", grid.k},
	      {"parameter", param_name(grid.parameter)},
	      {"n", grid.ns},
	      {"values", grid.values},
	      {"trials", grid.trials},
	      {"root_seed", grid.root_seed}}},
	    {"seed_rule", "trial seed = derive_seed(root_seed, {n, round(value*1e6), "
	                  "trial})"},
	    {"crossings", crossings},
	};
	return j.dump(2);
}

std::string trial_json(const TrialRecord &r)
{
	auto stats = [](const SolveStats &s) {
		return json{{"decisions", s.decisions},
		            {"propagations", s.propagations},
		            {"backtracks", s.backtracks},
		            {"wall_ns", s.wall.count()},
		            {"preprocessing", s.preprocessing}};
	};
	json j = {
	    {"n", r.params.n},
	    {"k", r.params.k},
	    {"trial", r.trial},
	    {"seed", r.params.seed},
	    {"digest", r.digest},
	    {"all_zero_function",
	     r.all_zero_function ? json(*r.all_zero_function) : json(nullptr)},
	    {"conflicting_pair", r.conflicting_pair
	                             ? json::array({r.conflicting_pair->first,
	                                            r.conflicting_pair->second})
	                             : json(nullptr)},
	    {"two_sat_unsat", r.two_sat_unsat},
	    {"two_sat_clauses", r.two_sat_clauses},
	    {"two_sat_stats", stats(r.two_sat_stats)},
	    {"full_verdict",
	     r.full_verdict ? json(to_string(*r.full_verdict)) : json(nullptr)},
	    {"full_clauses", r.full_clauses},
	    {"full_stats", stats(r.full_stats)},
	    {"decided_by", to_string(r.decided_by)},
	    {"insoluble", r.insoluble()},
	};
	if (auto *u = std::get_if<UniformModel>(&r.params.model))
		j["p"] = u->p;
	else
		j["z"] = std::get<FixedRatioModel>(r.params.model).z;
	if (!r.error.empty())
		j["error"] = r.error;
	return j.dump();
}

std::string fraction_svg(const SweepSummary &summary)
{
	constexpr double width = 640, height = 400, margin = 50;
	double lo = 0, hi = 1;
	if (!summary.cells.empty())
	{
		auto [a, b] = std::minmax_element(
		    summary.cells.begin(), summary.cells.end(),
		    [](const auto &x, const auto &y) { return x.value < y.value; });
		lo = a->value;
		hi = b->value > a->value ? b->value : a->value + 1;
	}
	auto px = [&](double v) {
		return margin + (v - lo) / (hi - lo) * (width - 2 * margin);
	};
	auto py = [&](double f) { return height - margin - f * (height - 2 * margin); };

	static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c",
	                                "#9467bd", "#ff7f0e", "#8c564b"};
	std::ostringstream s;
	s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
	  << "\" height=\"" << height << "\">\n";
	s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
	s << "<line x1=\"" << margin << "\" y1=\"" << py(0) << "\" x2=\""
	  << width - margin << "\" y2=\"" << py(0) << "\" stroke=\"black\"/>\n";
	s << "<line x1=\"" << margin << "\" y1=\"" << py(0) << "\" x2=\"" << margin
	  << "\" y2=\"" << py(1) << "\" stroke=\"black\"/>\n";
	s << "<text x=\"" << width / 2 << "\" y=\"" << height - 10
	  << "\" text-anchor=\"middle\">" << param_name(summary.parameter)
	  << " (" << num(lo) << " .. " << num(hi) << ")</text>\n";
	s << "<text x=\"12\" y=\"" << height / 2
	  << "\" transform=\"rotate(-90 12 " << height / 2
	  << ")\" text-anchor=\"middle\">fraction insoluble</text>\n";

	std::size_t colour = 0, row = 0;
	for (const auto &[n, crossing] : summary.crossing_full)
	{
		(void)crossing;
		auto c = palette[colour++ % std::size(palette)];
		std::ostringstream full, sub;
		for (const auto &cell : summary.cells)
			if (cell.n == n)
			{
				full << num(px(cell.value)) << ',' << num(py(cell.frac_insoluble_full)) << ' ';
				sub << num(px(cell.value)) << ',' << num(py(cell.frac_insoluble_2sat)) << ' ';
			}
		s << "<polyline fill=\"none\" stroke=\"" << c << "\" points=\""
		  << full.str() << "\"/>\n";
		s << "<polyline fill=\"none\" stroke=\"" << c
		  << "\" stroke-dasharray=\"4 3\" points=\"" << sub.str() << "\"/>\n";
		s << "<text x=\"" << margin + 10 << "\" y=\"" << margin + 16 * row++
		  << "\" fill=\"" << c << "\">n=" << n << " (dashed: 2-SAT)</text>\n";
	}
	s << "</svg>\n";
	return s.str();
}

void write_report(const std::filesystem::path &dir, const SweepGrid &grid,
                  const SweepSummary &summary, bool svg)
{
	std::error_code ec;
	std::filesystem::create_directories(dir, ec);
	if (ec)
		throw Error("cannot create " + dir.string() + ": " + ec.message());
	write_file(dir / "summary.csv", to_csv(summary));
	write_file(dir / "meta.json", metadata_json(grid, summary) + "\n");
	if (svg)
		write_file(dir / "fractions.svg", fraction_svg(summary));
}

} // namespace nkland
