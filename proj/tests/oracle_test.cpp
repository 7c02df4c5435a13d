#include "bch/oracle.hpp"

#include <random>

#include "gtest/gtest.h"

using namespace bch;
using namespace bch::oracle;

namespace {

Alphabet const xy = Alphabet::standard(2);

TruncatedNCSeries from_text(
    int degree, std::vector<std::pair<std::string, Rational>> const &terms,
    Alphabet const &alphabet = xy)
{
	TruncatedNCSeries s(alphabet, degree);
	for (auto const &[w, c] : terms)
		s.add(Word::parse(w, alphabet), c);
	return s;
}

TruncatedNCSeries random_series(std::mt19937 &rng, int degree)
{
	std::uniform_int_distribution<int> len(0, degree);
	std::uniform_int_distribution<int> letter(0, 1);
	std::uniform_int_distribution<int> value(-3, 3);
	TruncatedNCSeries s(xy, degree);
	for (int k = 0; k < 6; ++k)
	{
		Word w;
		for (int i = len(rng); i > 0; --i)
			w.letters.push_back(static_cast<std::uint8_t>(letter(rng)));
		s.add(w, Rational(value(rng), 2));
	}
	return s;
}

} // namespace

TEST(Oracle, MultiplicationExamples)
{
	auto x = TruncatedNCSeries::letter(xy, 2, 0);
	auto y = TruncatedNCSeries::letter(xy, 2, 1);
	EXPECT_EQ(nc_mul(x, y), from_text(2, {{"xy", 1}}));

	auto one = TruncatedNCSeries::scalar(xy, 2, 1);
	EXPECT_EQ(nc_mul(one + x, one + y),
	          from_text(2, {{"", 1}, {"x", 1}, {"y", 1}, {"xy", 1}}));
	EXPECT_EQ(nc_mul(x + y, x + y),
	          from_text(2, {{"xx", 1}, {"xy", 1}, {"yx", 1}, {"yy", 1}}));
}

TEST(Oracle, TruncationDropsLongWords)
{
	auto x = TruncatedNCSeries::letter(xy, 2, 0);
	EXPECT_TRUE(nc_mul(nc_mul(x, x), x).terms().empty());
}

TEST(Oracle, AlphabetMismatch)
{
	auto a = TruncatedNCSeries::letter(xy, 2, 0);
	auto b = TruncatedNCSeries::letter(Alphabet({"a", "b"}), 2, 0);
	EXPECT_THROW(nc_mul(a, b), std::invalid_argument);
	auto c = TruncatedNCSeries::letter(xy, 3, 0);
	EXPECT_THROW(nc_mul(a, c), std::invalid_argument);
}

TEST(Oracle, ExpAndLog)
{
	auto x = TruncatedNCSeries::letter(xy, 3, 0);
	EXPECT_EQ(nc_exp(x), from_text(3, {{"", 1},
	                                   {"x", 1},
	                                   {"xx", Rational(1, 2)},
	                                   {"xxx", Rational(1, 6)}}));

	auto sum = TruncatedNCSeries::letter(xy, 4, 0) +
	           TruncatedNCSeries::letter(xy, 4, 1);
	EXPECT_EQ(nc_log(nc_exp(sum)), sum);

	auto ex = nc_exp(TruncatedNCSeries::letter(xy, 2, 0));
	auto ey = nc_exp(TruncatedNCSeries::letter(xy, 2, 1));
	EXPECT_EQ(nc_log(nc_mul(ex, ey)).slice(2),
	          from_text(2, {{"xy", Rational(1, 2)}, {"yx", Rational(-1, 2)}})
	              .slice(2));
}

TEST(Oracle, Preconditions)
{
	auto one_plus_x = TruncatedNCSeries::scalar(xy, 2, 1) +
	                  TruncatedNCSeries::letter(xy, 2, 0);
	EXPECT_THROW(nc_exp(one_plus_x), std::invalid_argument);
	EXPECT_THROW(nc_log(TruncatedNCSeries::letter(xy, 2, 0)),
	             std::invalid_argument);
	EXPECT_THROW(nc_log(TruncatedNCSeries::scalar(xy, 2, 2)),
	             std::invalid_argument);
	EXPECT_THROW(oracle_bch(0, 2), std::invalid_argument);
	EXPECT_THROW(oracle_bch(2, 1), std::invalid_argument);
}

TEST(Oracle, BchExamples)
{
	auto z3 = oracle_bch(3, 2);
	EXPECT_EQ(z3.size(), 6u);
	EXPECT_EQ(z3.coefficient("yxx"), Rational(1, 12));
	EXPECT_EQ(z3.coefficient("xyx"), Rational(-1, 6));
	EXPECT_EQ(z3.coefficient("xxy"), Rational(1, 12));
	EXPECT_EQ(z3.coefficient("yyx"), Rational(1, 12));
	EXPECT_EQ(z3.coefficient("yxy"), Rational(-1, 6));
	EXPECT_EQ(z3.coefficient("xyy"), Rational(1, 12));

	auto z2w = oracle_bch(2, 3);
	EXPECT_EQ(z2w.size(), 6u);
	for (auto const &w : {"xw", "xy", "yw"})
		EXPECT_EQ(z2w.coefficient(w), Rational(1, 2)) << w;
	for (auto const &w : {"wx", "wy", "yx"})
		EXPECT_EQ(z2w.coefficient(w), Rational(-1, 2)) << w;
}

// log((1+x)(1+y)) = log(1 + a), a = x + y + xy; degree 2 is xy - (x+y)^2/2.
TEST(Oracle, OnePlusTSeries)
{
	SeriesSpec f = SeriesSpec::parse("1,1");
	std::vector<SeriesSpec> fs{f, f};
	auto z = oracle_bch(2, 2, fs);
	EXPECT_EQ(z.size(), 4u);
	EXPECT_EQ(z.coefficient("xx"), Rational(-1, 2));
	EXPECT_EQ(z.coefficient("xy"), Rational(1, 2));
	EXPECT_EQ(z.coefficient("yx"), Rational(-1, 2));
	EXPECT_EQ(z.coefficient("yy"), Rational(-1, 2));
	EXPECT_THROW(oracle_bch(2, 3, fs), std::invalid_argument);
}

TEST(Oracle, AlgebraProperties)
{
	std::mt19937 rng(11);
	for (int trial = 0; trial < 60; ++trial)
	{
		auto a = random_series(rng, 4);
		auto b = random_series(rng, 4);
		auto c = random_series(rng, 4);
		EXPECT_EQ(nc_mul(nc_mul(a, b), c), nc_mul(a, nc_mul(b, c)));
		EXPECT_EQ(nc_mul(a, b + c), nc_mul(a, b) + nc_mul(a, c));
		EXPECT_EQ(nc_mul(a + b, c), nc_mul(a, c) + nc_mul(b, c));

		// exp/log inverse pair once the normalizations hold
		auto nilpotent = a - TruncatedNCSeries::scalar(xy, 4, a.constant_term());
		EXPECT_EQ(nc_log(nc_exp(nilpotent)), nilpotent);
		auto unipotent = TruncatedNCSeries::scalar(xy, 4, 1) + nilpotent;
		EXPECT_EQ(nc_exp(nc_log(unipotent)), unipotent);
	}
}
