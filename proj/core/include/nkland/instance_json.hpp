#pragma once

// Canonical instance persistence:
//   { "n": int, "k": int,
//     "functions": [ { "main": int, "nbrs": [int, ...], "table": "0110..." } ] }
// The table bitstring lists row 0 first (see instance.hpp for row order).

#include "nkland/instance.hpp"

#include <filesystem>
#include <string>

namespace nkland {

std::string to_json(const NKInstance &inst);
/// Throws nkland::Error on malformed input. Does not run validate().
NKInstance instance_from_json(const std::string &text);

void save_instance(const NKInstance &inst, const std::filesystem::path &path);
NKInstance load_instance(const std::filesystem::path &path);

} // namespace nkland
