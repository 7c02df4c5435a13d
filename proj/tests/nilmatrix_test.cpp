#include "bch/nilmatrix.hpp"

#include "gtest/gtest.h"
#include "support/full_log.hpp"

using namespace bch;

namespace {

MultilinearPoly sigma(int n, std::vector<int> positions, Rational c = 1,
                      int family = 1, int families = 1)
{
	return MultilinearPoly::monomial(
	    Monomial::from_positions(n, positions, family, families), c);
}

MultilinearPoly constant(int n, Rational c, int families = 1)
{
	return MultilinearPoly::constant(n, c, families);
}

SeriesSpec const exp_series = SeriesSpec::exponential();

// The closed form c_{j-i} * prod_{k=i}^{j-1} var_k, entry by entry.
TriMatrix closed_form(int n, int family, SeriesSpec const &f, int families)
{
	TriMatrix m(n, families);
	for (int i = 0; i <= n; ++i)
		for (int j = i; j <= n; ++j)
		{
			std::vector<int> positions;
			if (family != kBaseFamily)
				for (int k = i + 1; k <= j; ++k)
					positions.push_back(k);
			Monomial mono = family == kBaseFamily
			                    ? Monomial(n, families)
			                    : Monomial::from_positions(n, positions,
			                                               family, families);
			m.at(i, j) = MultilinearPoly::monomial(mono, f.coefficient(j - i));
		}
	return m;
}

} // namespace

TEST(NilMatrix, ExponentialFactorMatricesOrderTwo)
{
	auto const f = build_factor_matrix(2, kBaseFamily, exp_series);
	EXPECT_EQ(f.at(0, 0), constant(2, 1));
	EXPECT_EQ(f.at(0, 1), constant(2, 1));
	EXPECT_EQ(f.at(0, 2), constant(2, Rational(1, 2)));
	EXPECT_EQ(f.at(1, 2), constant(2, 1));
	EXPECT_TRUE(f.at(1, 0).is_zero());
	EXPECT_TRUE(f.at(2, 0).is_zero());

	auto g = build_factor_matrix(2, 1, exp_series);
	EXPECT_EQ(g.at(0, 1), sigma(2, {1}));
	EXPECT_EQ(g.at(0, 2), sigma(2, {1, 2}, Rational(1, 2)));
	EXPECT_EQ(g.at(1, 2), sigma(2, {2}));
	EXPECT_TRUE(g.has_unit_diagonal());
}

TEST(NilMatrix, PolynomialSeriesFactor)
{
	auto f = build_factor_matrix(2, kBaseFamily, SeriesSpec::parse("1,1"));
	EXPECT_EQ(f.at(0, 1), constant(2, 1));
	EXPECT_TRUE(f.at(0, 2).is_zero());
	EXPECT_EQ(f.at(1, 2), constant(2, 1));
	EXPECT_TRUE(f.has_unit_diagonal());
}

TEST(NilMatrix, SeriesMustStartAtOne)
{
	EXPECT_THROW(SeriesSpec::parse("2,1"), std::invalid_argument);
	EXPECT_THROW(SeriesSpec::parse("0"), std::invalid_argument);
	EXPECT_THROW(build_factor_matrix(0, kBaseFamily, exp_series),
	             std::invalid_argument);
}

TEST(NilMatrix, ProductFG)
{
	auto f = build_factor_matrix(2, kBaseFamily, exp_series);
	auto g = build_factor_matrix(2, 1, exp_series);
	auto fg = mat_mul(f, g);
	EXPECT_EQ(fg.at(0, 0), constant(2, 1));
	EXPECT_EQ(fg.at(0, 1), constant(2, 1) + sigma(2, {1}));
	EXPECT_EQ(fg.at(0, 2), constant(2, Rational(1, 2)) + sigma(2, {2}) +
	                           sigma(2, {1, 2}, Rational(1, 2)));
	EXPECT_EQ(fg.at(1, 2), constant(2, 1) + sigma(2, {2}));

	auto d = fg - TriMatrix::identity(2);
	auto d2 = d * d;
	EXPECT_EQ(d2.at(0, 2), constant(2, 1) + sigma(2, {1}) + sigma(2, {2}) +
	                           sigma(2, {1, 2}));
	EXPECT_TRUE(d2.at(0, 1).is_zero());

	EXPECT_EQ(f * TriMatrix::identity(2), f);
}

TEST(NilMatrix, SuperdiagonalProduct)
{
	auto mn = superdiagonal_matrix(2, kBaseFamily) * superdiagonal_matrix(2, 1);
	for (int i = 0; i <= 2; ++i)
		for (int j = i; j <= 2; ++j)
		{
			if (i == 0 && j == 2)
				EXPECT_EQ(mn.at(i, j), sigma(2, {2}));
			else
				EXPECT_TRUE(mn.at(i, j).is_zero()) << i << "," << j;
		}
}

TEST(NilMatrix, LogUpperRight)
{
	auto fg = [](int n) {
		return build_factor_matrix(n, kBaseFamily, exp_series) *
		       build_factor_matrix(n, 1, exp_series);
	};
	EXPECT_EQ(log_upper_right(fg(1)), constant(1, 1) + sigma(1, {1}));
	EXPECT_EQ(log_upper_right(fg(2)), sigma(2, {2}, Rational(1, 2)) +
	                                      sigma(2, {1}, Rational(-1, 2)));
	auto expected3 = sigma(3, {1}, Rational(1, 12)) +
	                 sigma(3, {2}, Rational(-1, 6)) +
	                 sigma(3, {3}, Rational(1, 12)) +
	                 sigma(3, {1, 2}, Rational(1, 12)) +
	                 sigma(3, {1, 3}, Rational(-1, 6)) +
	                 sigma(3, {2, 3}, Rational(1, 12));
	EXPECT_EQ(log_upper_right(fg(3)), expected3);
}

TEST(NilMatrix, LogNeedsUnitDiagonal)
{
	auto p = TriMatrix::identity(2);
	p.at(1, 1) = constant(2, 2);
	EXPECT_THROW(log_upper_right(p), std::invalid_argument);
	EXPECT_THROW(p.at(2, 1), std::out_of_range);
}

TEST(NilMatrix, WordProductExamples)
{
	auto A = Alphabet({"M", "N"});
	EXPECT_EQ(word_matrix_product(3, Word::parse("NMM", A)), sigma(3, {1}));
	EXPECT_EQ(word_matrix_product(3, Word::parse("MNN", A)), sigma(3, {2, 3}));
	EXPECT_EQ(word_matrix_product(2, Word::parse("MM", A)), constant(2, 1));
	EXPECT_THROW(word_matrix_product(3, Word::parse("MN", A)),
	             std::invalid_argument);
}

// Every word over {M, N} yields exactly the monomial of its N positions.
TEST(NilMatrix, WordProductIdentityExhaustive)
{
	for (int n = 1; n <= 6; ++n)
		for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
		{
			Word w;
			std::vector<int> positions;
			for (int i = 0; i < n; ++i)
			{
				bool is_n = (mask >> i) & 1u;
				w.letters.push_back(is_n ? 1 : 0);
				if (is_n)
					positions.push_back(i + 1);
			}
			EXPECT_EQ(word_matrix_product(n, w), sigma(n, positions));
		}
}

TEST(NilMatrix, FactorMatricesAreUnipotent)
{
	for (int n = 1; n <= 6; ++n)
		for (int families = 1; families <= 2; ++families)
			for (int family = 0; family <= families; ++family)
				for (auto const &f :
				     {exp_series, SeriesSpec::parse("1,1"),
				      SeriesSpec::parse("1,-2,1/3,5")})
				{
					auto a = build_factor_matrix(n, family, f, families);
					EXPECT_TRUE(a.has_unit_diagonal());
					auto d = a - TriMatrix::identity(n, families);
					EXPECT_EQ(bch::testing::matrix_power(d, n + 1),
					          TriMatrix(n, families));
				}
}

// Horner construction vs. closed-form entries vs. sum of explicit powers.
TEST(NilMatrix, ExponentialIdentityTwoRoutes)
{
	for (int n = 1; n <= 6; ++n)
		for (int families = 1; families <= 2; ++families)
			for (int family = 0; family <= families; ++family)
			{
				auto built = build_factor_matrix(n, family, exp_series,
				                                 families);
				EXPECT_EQ(built, closed_form(n, family, exp_series, families));

				auto a = superdiagonal_matrix(n, family, families);
				TriMatrix sum(n, families);
				for (int k = 0; k <= n; ++k)
					sum += bch::testing::matrix_power(a, k).scaled(
					    inverse_factorial(k));
				EXPECT_EQ(built, sum);
			}
	auto f = SeriesSpec::parse("1,3,-1/2,0,7");
	EXPECT_EQ(build_factor_matrix(5, 1, f), closed_form(5, 1, f, 1));
}

TEST(NilMatrix, LogExpRoundTrip)
{
	for (int n = 1; n <= 5; ++n)
	{
		auto fg = build_factor_matrix(n, kBaseFamily, exp_series) *
		          build_factor_matrix(n, 1, exp_series);
		auto log = bch::testing::full_log(fg);
		EXPECT_EQ(bch::testing::full_exp(log), fg);
		EXPECT_EQ(log.at(0, n), log_upper_right(fg));
	}
}

TEST(NilMatrix, ThreeFactorProductStaysMultilinear)
{
	int const n = 4;
	auto p = build_factor_matrix(n, kBaseFamily, exp_series, 2) *
	         build_factor_matrix(n, 1, exp_series, 2) *
	         build_factor_matrix(n, 2, exp_series, 2);
	auto top = log_upper_right(p);
	EXPECT_FALSE(top.is_zero());
	for (auto const &[m, c] : top.terms())
		EXPECT_LE(m.degree(), n);
}
