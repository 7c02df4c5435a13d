#pragma once

#include <map>
#include <span>

#include "bch/rational.hpp"
#include "bch/series.hpp"
#include "bch/words.hpp"

// Brute-force truncated free associative algebra. Works directly with
// noncommuting words and shares nothing with the matrix pipeline beyond
// Rational and the word types; it exists to certify that pipeline.
namespace bch::oracle {

class TruncatedNCSeries
{
  public:
	TruncatedNCSeries(Alphabet alphabet, int max_degree);

	static TruncatedNCSeries scalar(Alphabet alphabet, int max_degree,
	                                Rational c);
	static TruncatedNCSeries letter(Alphabet alphabet, int max_degree,
	                                int index);

	Alphabet const &alphabet() const { return alphabet_; }
	int max_degree() const { return max_degree_; }
	std::map<Word, Rational> const &terms() const { return terms_; }
	Rational coefficient(Word const &w) const;
	Rational constant_term() const { return coefficient(Word()); }
	/// Words longer than max_degree are silently dropped.
	void add(Word const &w, Rational const &c);

	TruncatedNCSeries &operator+=(TruncatedNCSeries const &o);
	TruncatedNCSeries &operator-=(TruncatedNCSeries const &o);
	friend TruncatedNCSeries operator+(TruncatedNCSeries a,
	                                   TruncatedNCSeries const &b)
	{
		return a += b;
	}
	friend TruncatedNCSeries operator-(TruncatedNCSeries a,
	                                   TruncatedNCSeries const &b)
	{
		return a -= b;
	}
	TruncatedNCSeries scaled(Rational const &c) const;

	/// Homogeneous part of the given degree as an NCSeries.
	NCSeries slice(int degree) const;

	friend bool operator==(TruncatedNCSeries const &,
	                       TruncatedNCSeries const &) = default;

  private:
	Alphabet alphabet_;
	int max_degree_;
	std::map<Word, Rational> terms_;
};

TruncatedNCSeries nc_mul(TruncatedNCSeries const &a,
                         TruncatedNCSeries const &b);
/// sum_{k<=n} a^k/k!; requires a zero constant term.
TruncatedNCSeries nc_exp(TruncatedNCSeries const &a);
/// -sum_{q<=n} (-1)^q/q (a-1)^q; requires constant term exactly 1.
TruncatedNCSeries nc_log(TruncatedNCSeries const &a);
/// f(a) = sum_k c_k a^k; requires a zero constant term.
TruncatedNCSeries nc_apply(SeriesSpec const &f, TruncatedNCSeries const &a);

/// Degree-n part of log(f_0(a_0) f_1(a_1) ... f_{m-1}(a_{m-1})) computed in
/// the free algebra. f_list holds one series per factor, or a single series
/// shared by all factors.
NCSeries oracle_bch(int n, int factors, std::span<SeriesSpec const> f_list);
NCSeries oracle_bch(int n, int factors = 2);

} // namespace bch::oracle
