#pragma once

// Reproducible random streams. The engine is std::mt19937_64, whose output
// sequence is fixed by the standard; the bounded and real-valued draws are
// implemented here because std:: distributions differ between libraries.
//
// Sub-stream seeding: derive_seed(seed, a, b, ...) folds each word into the
// state with splitmix64, so derive_seed(s, i) is the seed of function i's
// stream for root seed s.

#include <cstdint>
#include <initializer_list>
#include <random>

namespace nkland {

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ull;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
	return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                    std::initializer_list<std::uint64_t> path)
{
	std::uint64_t h = splitmix64(seed);
	for (auto w : path)
		h = splitmix64(h ^ splitmix64(w));
	return h;
}

class Rng
{
  public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}

	std::uint64_t next() { return engine_(); }

	/// Uniform integer in [0, bound), bound > 0. Rejection sampling.
	std::uint64_t below(std::uint64_t bound)
	{
		auto limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
		std::uint64_t x;
		do
			x = next();
		while (x >= limit);
		return x % bound;
	}

	/// Uniform double in [0, 1) with 53 random bits.
	double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

	/// True with probability p; exact at p = 0 and p = 1.
	bool bernoulli(double p) { return unit() < p; }

  private:
	std::mt19937_64 engine_;
};

} // namespace nkland
