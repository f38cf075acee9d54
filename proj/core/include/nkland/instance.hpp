#pragma once

// NK landscape data model: local fitness functions over a main variable plus
// k neighbours, each given by a binary lookup table.
//
// Row convention (also the on-disk bitstring order): row r of a table encodes
// the tuple (x_main, nb_1, ..., nb_k) with x_main as the most significant bit,
//   r = x_main * 2^k + sum_j nb_j * 2^(k - j).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nkland {

using Var = std::uint32_t;

/// Dense bit vector holding one fitness value per table row.
class TruthTable
{
  public:
	TruthTable() = default;
	explicit TruthTable(std::size_t rows, bool fill = true);

	/// Parse a string of '0'/'1' characters, row 0 first.
	static TruthTable from_bitstring(std::string_view bits);

	std::size_t size() const { return rows_; }
	bool operator[](std::size_t row) const
	{
		return (words_[row >> 6] >> (row & 63)) & 1u;
	}
	void set(std::size_t row, bool value);

	std::size_t zero_count() const;
	bool all_zero() const { return zero_count() == rows_; }
	bool has_zero() const { return zero_count() != 0; }

	std::string to_bitstring() const;

	friend bool operator==(const TruthTable &, const TruthTable &) = default;

  private:
	std::size_t rows_ = 0;
	std::vector<std::uint64_t> words_;
};

struct LocalFitness
{
	Var main_var = 0;
	std::vector<Var> neighborhood;
	TruthTable table;

	std::size_t k() const { return neighborhood.size(); }

	/// Variables read by this function: main variable first, then neighbours.
	std::vector<Var> variables() const;

	friend bool operator==(const LocalFitness &, const LocalFitness &) = default;
};

/// One binary value per variable.
using Assignment = std::vector<std::uint8_t>;

struct NKInstance
{
	std::size_t n = 0;
	std::size_t k = 0;
	std::vector<LocalFitness> functions;

	friend bool operator==(const NKInstance &, const NKInstance &) = default;
};

struct Violation
{
	// Offending function index, or npos for instance-level problems.
	std::size_t function = npos;
	std::string message;

	static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

std::size_t row_index(std::span<const std::uint8_t> tuple);
/// Inverse of row_index for a tuple of `width` bits.
std::vector<std::uint8_t> decode_row(std::size_t row, std::size_t width);

/// Row of f's table selected by assignment a. Throws std::out_of_range when a
/// does not cover f's variables.
std::size_t row_of(const LocalFitness &f, std::span<const std::uint8_t> a);

bool evaluate_local(const LocalFitness &f, std::span<const std::uint8_t> a);
std::size_t evaluate(const NKInstance &inst, std::span<const std::uint8_t> a);
bool is_solution(const NKInstance &inst, std::span<const std::uint8_t> a);

std::vector<Violation> validate(const NKInstance &inst);

/// 64-bit FNV-1a digest over (n, k, every function's variables and table).
std::uint64_t digest(const NKInstance &inst);

} // namespace nkland
