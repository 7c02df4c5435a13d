#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bch {

class DivisionByZero : public std::domain_error
{
  public:
	DivisionByZero() : std::domain_error("rational division by zero") {}
};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational
{
  public:
	Rational() = default;
	Rational(std::int64_t value);
	Rational(std::int64_t numerator, std::int64_t denominator);
	explicit Rational(mpq_class value);

	/// Accepts "a", "-a", "a/b"; throws std::invalid_argument on malformed
	/// text and DivisionByZero on a zero denominator.
	static Rational parse(std::string_view text);
	static Rational from_strings(std::string_view numerator,
	                             std::string_view denominator);

	bool is_zero() const { return sgn(value_) == 0; }
	int sign() const { return sgn(value_); }
	bool is_integer() const { return value_.get_den() == 1; }

	std::string numerator() const { return value_.get_num().get_str(); }
	std::string denominator() const { return value_.get_den().get_str(); }
	std::string str() const;

	mpq_class const &raw() const { return value_; }

	Rational operator-() const { return Rational(mpq_class(-value_)); }
	Rational &operator+=(Rational const &o);
	Rational &operator-=(Rational const &o);
	Rational &operator*=(Rational const &o);
	Rational &operator/=(Rational const &o);

	friend Rational operator+(Rational a, Rational const &b) { return a += b; }
	friend Rational operator-(Rational a, Rational const &b) { return a -= b; }
	friend Rational operator*(Rational a, Rational const &b) { return a *= b; }
	friend Rational operator/(Rational a, Rational const &b) { return a /= b; }

	friend bool operator==(Rational const &a, Rational const &b)
	{
		return cmp(a.value_, b.value_) == 0;
	}
	friend std::strong_ordering operator<=>(Rational const &a,
	                                        Rational const &b)
	{
		return cmp(a.value_, b.value_) <=> 0;
	}

  private:
	mpq_class value_{0};
};

/// 1/k! for k >= 0, and 0 for negative k.
Rational inverse_factorial(int k);

std::ostream &operator<<(std::ostream &os, Rational const &r);

} // namespace bch
