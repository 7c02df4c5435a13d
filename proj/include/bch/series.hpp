#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bch/rational.hpp"

namespace bch {

/// Power series f(t) = sum c_k t^k with f(0) = 1, either the exponential or
/// an explicit finite coefficient list (missing coefficients are zero).
class SeriesSpec
{
  public:
	static SeriesSpec exponential();
	/// Throws std::invalid_argument unless coefficients[0] == 1.
	explicit SeriesSpec(std::vector<Rational> coefficients);

	/// "exp" or a comma-separated rational list such as "1,1,1/2".
	static SeriesSpec parse(std::string_view text);

	Rational coefficient(int k) const;
	bool is_exponential() const { return exponential_; }
	/// Canonical text form; equal series have equal fingerprints.
	std::string fingerprint() const;

	friend bool operator==(SeriesSpec const &a, SeriesSpec const &b)
	{
		return a.exponential_ == b.exponential_ &&
		       a.coefficients_ == b.coefficients_;
	}

  private:
	SeriesSpec() = default;

	bool exponential_ = false;
	std::vector<Rational> coefficients_;
};

} // namespace bch
