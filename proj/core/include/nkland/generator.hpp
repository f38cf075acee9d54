#pragma once

// Random NK instances under the two random models:
//   uniform(p):      every table entry is 0 independently with probability p;
//   fixed_ratio(z):  with z = floor(z) + alpha, floor((1 - alpha) * n)
//                    functions (chosen uniformly) get floor(z) zero rows and
//                    the rest get floor(z) + 1; zero rows are a uniform subset.
//
// Function i draws its neighbourhood and its table from the stream seeded
// with derive_seed(seed, {i}); the fixed-ratio split uses
// derive_seed(seed, {kSplitStream}). Generation is therefore independent of
// evaluation order.

#include "nkland/instance.hpp"
#include "nkland/rng.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace nkland {

struct UniformModel
{
	double p = 0.0;
};

struct FixedRatioModel
{
	double z = 0.0;
};

using Model = std::variant<UniformModel, FixedRatioModel>;

struct GenParams
{
	std::size_t n = 0;
	std::size_t k = 2;
	Model model = FixedRatioModel{};
	std::uint64_t seed = 0;
};

inline constexpr std::uint64_t kSplitStream = 0xffff'ffff'ffff'fff0ull;
inline constexpr std::size_t kMaxK = 20;

/// Throws InvalidParameters when params are outside the model's domain.
void check_params(const GenParams &params);

/// k distinct indices from [0, n) \ {exclude}, in draw order. Partial
/// Fisher-Yates over the explicit candidate list.
std::vector<Var> sample_neighborhood(std::size_t n, std::size_t k, Var exclude,
                                     Rng &rng);

NKInstance gen_uniform(const GenParams &params);
NKInstance gen_fixed_ratio(const GenParams &params);
/// Dispatches on params.model.
NKInstance generate(const GenParams &params);

/// Number of functions that receive floor(z) zero rows.
std::size_t fixed_ratio_low_count(std::size_t n, double z);

} // namespace nkland
