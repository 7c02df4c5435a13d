#include "bch/rational.hpp"

#include <numeric>
#include <random>

#include "gtest/gtest.h"

using bch::Rational;

namespace {

// Independent reference: operate on unreduced __int128 fractions and reduce
// once at the end.
struct RawFraction
{
	__int128 num, den;
};

RawFraction reduce(RawFraction f)
{
	if (f.den < 0)
	{
		f.num = -f.num;
		f.den = -f.den;
	}
	__int128 a = f.num < 0 ? -f.num : f.num, b = f.den;
	while (b != 0)
	{
		__int128 t = a % b;
		a = b;
		b = t;
	}
	if (a == 0)
		return {0, 1};
	return {f.num / a, f.den / a};
}

void expect_equal(Rational const &r, RawFraction f)
{
	f = reduce(f);
	EXPECT_EQ(r, Rational(static_cast<std::int64_t>(f.num),
	                      static_cast<std::int64_t>(f.den)));
	EXPECT_EQ(r.numerator(), std::to_string(static_cast<std::int64_t>(f.num)));
	EXPECT_EQ(r.denominator(),
	          std::to_string(static_cast<std::int64_t>(f.den)));
}

} // namespace

TEST(Rational, Examples)
{
	EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
	auto zero = Rational(1, 6) * Rational(0);
	EXPECT_TRUE(zero.is_zero());
	EXPECT_EQ(zero.numerator(), "0");
	EXPECT_EQ(zero.denominator(), "1");
	EXPECT_EQ(Rational(-1, 12) - Rational(1, 12), Rational(-1, 6));
	EXPECT_EQ((Rational(-1, 12) - Rational(1, 12)).str(), "-1/6");
}

TEST(Rational, LowestTermsAndSign)
{
	Rational r(6, -4);
	EXPECT_EQ(r.numerator(), "-3");
	EXPECT_EQ(r.denominator(), "2");
	EXPECT_EQ(Rational(0, -7).str(), "0");
	EXPECT_EQ(Rational(10, 5).str(), "2");
}

TEST(Rational, DivisionByZero)
{
	EXPECT_THROW(Rational(1, 2) / Rational(0), bch::DivisionByZero);
	EXPECT_THROW(Rational(1, 0), bch::DivisionByZero);
	EXPECT_THROW(Rational::parse("3/0"), bch::DivisionByZero);
}

TEST(Rational, Parse)
{
	EXPECT_EQ(Rational::parse("-1/1512"), Rational(-1, 1512));
	EXPECT_EQ(Rational::parse("4/8"), Rational(1, 2));
	EXPECT_EQ(Rational::parse("+7"), Rational(7));
	EXPECT_THROW(Rational::parse(""), std::invalid_argument);
	EXPECT_THROW(Rational::parse("1/2/3"), std::invalid_argument);
	EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
	EXPECT_THROW(Rational::from_strings("1", "-"), std::invalid_argument);
}

TEST(Rational, InverseFactorial)
{
	EXPECT_EQ(bch::inverse_factorial(0), Rational(1));
	EXPECT_EQ(bch::inverse_factorial(5), Rational(1, 120));
	EXPECT_TRUE(bch::inverse_factorial(-1).is_zero());
	EXPECT_EQ(bch::inverse_factorial(20).denominator(), "2432902008176640000");
}

TEST(Rational, ArbitraryPrecision)
{
	Rational big = bch::inverse_factorial(30) * bch::inverse_factorial(30);
	EXPECT_EQ(big.numerator(), "1");
	EXPECT_GT(big.denominator().size(), 60u);
	EXPECT_EQ(big / big, Rational(1));
}

// Results agree with the reduce-after reference for random operands.
TEST(Rational, MatchesReduceAfterReference)
{
	std::mt19937_64 rng(20261016);
	std::uniform_int_distribution<std::int64_t> num(-100000, 100000);
	std::uniform_int_distribution<std::int64_t> den(1, 100000);
	for (int trial = 0; trial < 2000; ++trial)
	{
		std::int64_t an = num(rng), ad = den(rng), bn = num(rng),
		             bd = den(rng);
		Rational a(an, ad), b(bn, bd);
		__int128 AN = an, AD = ad, BN = bn, BD = bd;
		expect_equal(a + b, {AN * BD + BN * AD, AD * BD});
		expect_equal(a - b, {AN * BD - BN * AD, AD * BD});
		expect_equal(a * b, {AN * BN, AD * BD});
		if (bn != 0)
			expect_equal(a / b, {AN * BD, AD * BN});
	}
}
