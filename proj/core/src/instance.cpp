#include "nkland/instance.hpp"

#include "nkland/error.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace nkland {

TruthTable::TruthTable(std::size_t rows, bool fill)
    : rows_(rows), words_((rows + 63) / 64, fill ? ~std::uint64_t{0} : 0)
{
	if (fill && rows % 64 != 0)
		words_.back() &= (std::uint64_t{1} << (rows % 64)) - 1;
}

TruthTable TruthTable::from_bitstring(std::string_view bits)
{
	TruthTable t(bits.size(), false);
	for (std::size_t r = 0; r < bits.size(); ++r)
	{
		if (bits[r] == '1')
			t.set(r, true);
		else if (bits[r] != '0')
			throw Error("table bitstring may only contain '0' and '1'");
	}
	return t;
}

void TruthTable::set(std::size_t row, bool value)
{
	auto bit = std::uint64_t{1} << (row & 63);
	if (value)
		words_[row >> 6] |= bit;
	else
		words_[row >> 6] &= ~bit;
}

std::size_t TruthTable::zero_count() const
{
	std::size_t ones = 0;
	for (auto w : words_)
		ones += std::popcount(w);
	return rows_ - ones;
}

std::string TruthTable::to_bitstring() const
{
	std::string s(rows_, '0');
	for (std::size_t r = 0; r < rows_; ++r)
		if ((*this)[r])
			s[r] = '1';
	return s;
}

std::vector<Var> LocalFitness::variables() const
{
	std::vector<Var> vs;
	vs.reserve(neighborhood.size() + 1);
	vs.push_back(main_var);
	vs.insert(vs.end(), neighborhood.begin(), neighborhood.end());
	return vs;
}

std::size_t row_index(std::span<const std::uint8_t> tuple)
{
	std::size_t r = 0;
	for (auto b : tuple)
		r = (r << 1) | (b & 1u);
	return r;
}

std::vector<std::uint8_t> decode_row(std::size_t row, std::size_t width)
{
	std::vector<std::uint8_t> tuple(width);
	for (std::size_t j = 0; j < width; ++j)
		tuple[j] = (row >> (width - 1 - j)) & 1u;
	return tuple;
}

std::size_t row_of(const LocalFitness &f, std::span<const std::uint8_t> a)
{
	if (f.main_var >= a.size())
		throw std::out_of_range("assignment does not cover main variable");
	std::size_t r = a[f.main_var] & 1u;
	for (Var v : f.neighborhood)
	{
		if (v >= a.size())
			throw std::out_of_range("assignment does not cover neighbourhood");
		r = (r << 1) | (a[v] & 1u);
	}
	return r;
}

bool evaluate_local(const LocalFitness &f, std::span<const std::uint8_t> a)
{
	return f.table[row_of(f, a)];
}

std::size_t evaluate(const NKInstance &inst, std::span<const std::uint8_t> a)
{
	if (a.size() != inst.n)
		throw std::invalid_argument("assignment length " +
		                            std::to_string(a.size()) +
		                            " does not match n = " +
		                            std::to_string(inst.n));
	std::size_t sum = 0;
	for (const auto &f : inst.functions)
		sum += evaluate_local(f, a);
	return sum;
}

bool is_solution(const NKInstance &inst, std::span<const std::uint8_t> a)
{
	return evaluate(inst, a) == inst.n;
}

std::vector<Violation> validate(const NKInstance &inst)
{
	std::vector<Violation> out;
	auto flag = [&](std::size_t i, std::string msg) {
		out.push_back({i, std::move(msg)});
	};

	if (inst.n > 0 && inst.k > inst.n - 1)
		flag(Violation::npos, "k = " + std::to_string(inst.k) +
		                          " exceeds n - 1 = " +
		                          std::to_string(inst.n - 1));
	if (inst.functions.size() != inst.n)
		flag(Violation::npos, "expected " + std::to_string(inst.n) +
		                          " functions, found " +
		                          std::to_string(inst.functions.size()));

	for (std::size_t i = 0; i < inst.functions.size(); ++i)
	{
		const auto &f = inst.functions[i];
		auto tag = "function " + std::to_string(i) + ": ";
		if (f.main_var != i)
			flag(i, tag + "main variable is " + std::to_string(f.main_var));
		if (f.neighborhood.size() != inst.k)
			flag(i, tag + "neighbourhood has " +
			            std::to_string(f.neighborhood.size()) + " entries");

		std::set<Var> seen;
		bool dup = false, self = false, range = false;
		for (Var v : f.neighborhood)
		{
			dup |= !seen.insert(v).second;
			self |= v == f.main_var;
			range |= v >= inst.n;
		}
		if (dup)
			flag(i, tag + "duplicate index in neighbourhood");
		if (self)
			flag(i, tag + "neighbourhood contains the main variable");
		if (range)
			flag(i, tag + "neighbourhood index out of range");

		if (inst.k >= 62 || f.table.size() != (std::size_t{1} << (inst.k + 1)))
			flag(i, tag + "table has " + std::to_string(f.table.size()) +
			            " rows, expected 2^(k+1)");
	}
	return out;
}

namespace {

struct Fnv1a
{
	std::uint64_t h = 0xcbf29ce484222325ull;

	void byte(std::uint8_t b)
	{
		h ^= b;
		h *= 0x100000001b3ull;
	}
	void word(std::uint64_t w)
	{
		for (int i = 0; i < 8; ++i)
			byte(static_cast<std::uint8_t>(w >> (8 * i)));
	}
};

} // namespace

std::uint64_t digest(const NKInstance &inst)
{
	Fnv1a h;
	h.word(inst.n);
	h.word(inst.k);
	for (const auto &f : inst.functions)
	{
		h.word(f.main_var);
		for (Var v : f.neighborhood)
			h.word(v);
		for (std::size_t r = 0; r < f.table.size(); ++r)
			h.byte(f.table[r]);
	}
	return h.h;
}

} // namespace nkland
