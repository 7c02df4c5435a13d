#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bch/rational.hpp"
#include "bch/words.hpp"

namespace bch {

/// A choice of +1/-1 for sigma_1..sigma_n. Encoded as a bitmask where bit
/// i-1 is set iff sigma_i = -1.
class SignAssignment
{
  public:
	static constexpr int kMaxOrder = 24;

	SignAssignment(int n, std::uint32_t negative_mask);
	static SignAssignment from_signs(std::span<int const> signs);

	int order() const { return n_; }
	std::uint32_t code() const { return mask_; }
	int sign(int position) const;
	std::vector<int> signs() const;
	int plus_count() const;
	bool all_plus() const { return mask_ == 0; }
	SignAssignment reversed() const;
	std::string str() const;

	friend bool operator==(SignAssignment const &,
	                       SignAssignment const &) = default;
	friend auto operator<=>(SignAssignment const &,
	                        SignAssignment const &) = default;

  private:
	int n_;
	std::uint32_t mask_;
};

/// (log FG)_{1,n+1} at a sign assignment, using plain rational matrices.
Rational eval_assignment(int n, SignAssignment const &s);

enum class Pruning
{
	none,
	symmetry
};

enum class ValueOrigin : std::uint8_t
{
	missing,
	evaluated,
	parity_zero, // even number of +1 entries
	reversal     // copied from the reversed assignment
};

/// Values of (log FG)_{1,n+1} indexed by assignment code.
class SignedCoefficientTable
{
  public:
	SignedCoefficientTable(int n, Pruning pruning);

	int order() const { return n_; }
	Pruning pruning() const { return pruning_; }
	std::size_t size() const { return values_.size(); }
	bool complete() const;

	std::optional<Rational> const &at(std::uint32_t code) const;
	/// Throws std::out_of_range if the entry is missing.
	Rational const &value(SignAssignment const &s) const;
	ValueOrigin origin(std::uint32_t code) const { return origins_.at(code); }
	void set(std::uint32_t code, Rational v, ValueOrigin origin);

	/// Entry-for-entry equality of the values, ignoring provenance.
	bool same_values(SignedCoefficientTable const &o) const;

  private:
	int n_;
	Pruning pruning_;
	std::vector<std::optional<Rational>> values_;
	std::vector<ValueOrigin> origins_;
};

/// Evaluates the lattice in Gray-code order, split into contiguous shards
/// over `workers` threads (0 = hardware concurrency). The result does not
/// depend on the worker count.
SignedCoefficientTable build_table(int n, Pruning pruning,
                                   unsigned workers = 0);

/// z_n = 2^{-n} sum_s value(s) (x + s_1 y) ... (x + s_n y), expanded into
/// words. Throws std::invalid_argument for an incomplete table.
NCSeries reconstruct_term(int n, SignedCoefficientTable const &table);

struct ScanRow
{
	int n = 0;
	std::size_t assignments = 0;
	std::size_t evaluations = 0;
	std::size_t parity_zeros = 0;     // pruned without evaluation
	std::size_t structural_zeros = 0; // all-plus assignment, odd n > 1
	std::size_t nonzero = 0;
	std::vector<SignAssignment> unexpected_zeros;
	/// All-plus assignments that should vanish but did not.
	std::vector<SignAssignment> structural_violations;

	bool clean() const
	{
		return unexpected_zeros.empty() && structural_violations.empty();
	}
};

ScanRow scan_order(int n, unsigned workers = 0);
std::vector<ScanRow> scan_nonvanishing(int n_max, unsigned workers = 0);

} // namespace bch
