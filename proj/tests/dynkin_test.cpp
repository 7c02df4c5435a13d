#include "bch/dynkin.hpp"

#include "bch/term.hpp"
#include "gtest/gtest.h"

using namespace bch;

namespace {

Alphabet const xy = Alphabet::standard(2);

Word word(std::string_view s) { return Word::parse(s, xy); }

NCSeries series(int n,
                std::vector<std::pair<std::string, Rational>> const &terms)
{
	NCSeries s(xy, n);
	for (auto const &[w, c] : terms)
		s.add(word(w), c);
	return s;
}

} // namespace

TEST(Dynkin, SubstituteExamples)
{
	auto lie1 = dynkin_substitute(bch_term(1));
	ASSERT_EQ(lie1.size(), 2u);
	EXPECT_EQ(lie1[0], (LieTerm{Rational(1), word("x")}));
	EXPECT_EQ(lie1[1], (LieTerm{Rational(1), word("y")}));

	auto lie2 = dynkin_substitute(bch_term(2));
	ASSERT_EQ(lie2.size(), 2u);
	EXPECT_EQ(lie2[0], (LieTerm{Rational(1, 4), word("xy")}));
	EXPECT_EQ(lie2[1], (LieTerm{Rational(-1, 4), word("yx")}));
	EXPECT_EQ(expand_commutators(lie2, xy), bch_term(2));
}

TEST(Dynkin, RejectsInhomogeneousInput)
{
	auto mixed = series(2, {{"x", 1}, {"xy", 1}});
	EXPECT_THROW(dynkin_substitute(mixed), std::invalid_argument);
	EXPECT_TRUE(dynkin_substitute(NCSeries(xy, 3)).empty());
}

TEST(Dynkin, ExpandExamples)
{
	std::vector<LieTerm> xy_bracket{{Rational(1), word("xy")}};
	EXPECT_EQ(expand_commutators(xy_bracket, xy),
	          series(2, {{"xy", 1}, {"yx", -1}}));

	std::vector<LieTerm> nested{{Rational(1), word("xyx")}};
	EXPECT_EQ(expand_commutators(nested, xy),
	          series(3, {{"yxx", -1}, {"xyx", 2}, {"xxy", -1}}));

	EXPECT_TRUE(expand_commutators({}, xy).is_zero());
}

TEST(Dynkin, ExpansionIsLinear)
{
	std::vector<LieTerm> a{{Rational(2, 3), word("xyy")},
	                       {Rational(-1), word("yxyx")}};
	std::vector<LieTerm> b{{Rational(5), word("yx")},
	                       {Rational(1, 7), word("xyy")}};
	std::vector<LieTerm> both = a;
	both.insert(both.end(), b.begin(), b.end());
	auto ea = expand_commutators(a, xy);
	auto eb = expand_commutators(b, xy);
	auto sum = expand_commutators(both, xy);
	NCSeries expected(xy, 4);
	for (auto const *s : {&ea, &eb})
		for (auto const &[w, c] : s->terms())
			expected.add(w, c);
	EXPECT_EQ(sum, expected);
}

TEST(Dynkin, SingleLettersAreFixed)
{
	for (auto const *l : {"x", "y"})
	{
		auto s = series(1, {{l, Rational(3, 5)}});
		EXPECT_EQ(expand_commutators(dynkin_substitute(s), xy), s);
	}
}

TEST(Dynkin, IdempotentOnBchTerms)
{
	for (int n = 1; n <= 9; ++n)
	{
		auto z = bch_term(n);
		EXPECT_EQ(expand_commutators(dynkin_substitute(z), xy), z) << n;
	}
	for (int n = 1; n <= 4; ++n)
	{
		auto z = bch_term_multi(n, 3);
		EXPECT_EQ(expand_commutators(dynkin_substitute(z), z.alphabet()), z);
	}
}

// A word combination that is not a Lie element is changed by the map.
TEST(Dynkin, NotIdempotentOnNonLieElements)
{
	auto s = series(2, {{"xy", 1}});
	EXPECT_NE(expand_commutators(dynkin_substitute(s), xy), s);
}
