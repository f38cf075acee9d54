#include "nkland/instance_json.hpp"

#include "nkland/error.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace nkland {

using nlohmann::json;

std::string to_json(const NKInstance &inst)
{
	json fs = json::array();
	for (const auto &f : inst.functions)
		fs.push_back({{"main", f.main_var},
		              {"nbrs", f.neighborhood},
		              {"table", f.table.to_bitstring()}});
	json j = {{"n", inst.n}, {"k", inst.k}, {"functions", std::move(fs)}};
	return j.dump();
}

NKInstance instance_from_json(const std::string &text)
{
	try
	{
		auto j = json::parse(text);
		NKInstance inst;
		inst.n = j.at("n").get<std::size_t>();
		inst.k = j.at("k").get<std::size_t>();
		for (const auto &jf : j.at("functions"))
		{
			LocalFitness f;
			f.main_var = jf.at("main").get<Var>();
			f.neighborhood = jf.at("nbrs").get<std::vector<Var>>();
			f.table = TruthTable::from_bitstring(jf.at("table").get<std::string>());
			inst.functions.push_back(std::move(f));
		}
		return inst;
	}
	catch (const json::exception &e)
	{
		throw Error(std::string("instance JSON: ") + e.what());
	}
}

void save_instance(const NKInstance &inst, const std::filesystem::path &path)
{
	std::ofstream out(path);
	if (!out)
		throw Error("cannot open " + path.string() + " for writing");
	out << to_json(inst) << '\n';
	if (!out)
		throw Error("write failed: " + path.string());
}

NKInstance load_instance(const std::filesystem::path &path)
{
	std::ifstream in(path);
	if (!in)
		throw Error("cannot open " + path.string());
	std::stringstream ss;
	ss << in.rdbuf();
	return instance_from_json(ss.str());
}

} // namespace nkland
