#pragma once

// Monte Carlo estimates of event probabilities that have closed forms:
//  - an instance of the uniform model contains an all-zero table;
//  - two 4-zero tables sharing exactly one variable conflict (k = 2);
//  - a random fixed-ratio table on a 3-module's variables implies it;
//  - a random neighbourhood hits a given pair of variables.

#include <cstdint>
#include <string>

namespace nkland {

struct McReport
{
	std::string name;
	std::uint64_t samples = 0;
	std::uint64_t hits = 0;
	double estimate = 0.0;
	double target = 0.0;
	// Binomial standard error of the estimate under the target probability.
	double std_error = 0.0;

	/// |estimate - target| <= sigmas * std_error; exact match when the
	/// target is degenerate (0 or 1).
	bool within(double sigmas = 3.0) const;
	double z_score() const;
};

std::string to_json(const McReport &report);

/// 1 - (1 - p^(2^(k+1)))^n.
double all_zero_probability(double p, std::size_t n, std::size_t k);

/// Requires samples >= 10^4; every sample is a full gen_uniform instance.
McReport mc_check_all_zero(double p, std::size_t n, std::size_t k,
                           std::uint64_t samples, std::uint64_t seed = 1);

/// Target 2 / C(8,4)^2 = 2/4900 when the pair shares one variable; target 0
/// for the disjoint control group.
McReport mc_check_conflict(std::uint64_t samples, std::uint64_t seed = 1,
                           bool shared_variable = true);

/// Target module_ratio(alpha). A table carries floor(z) + 1 = 3 zeros with
/// probability alpha (the share of such tables in the fixed ratio model),
/// else 2.
McReport mc_check_module_prob(double alpha, std::uint64_t samples,
                              std::uint64_t seed = 1);

/// Probability that a size-2 neighbourhood of variable 0 in an n-variable
/// instance is exactly {1, 2}; target 1 / C(n-1, 2).
McReport mc_check_collision(std::size_t n, std::uint64_t samples,
                            std::uint64_t seed = 1);

} // namespace nkland
