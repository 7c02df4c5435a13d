#include "bch/dynkin.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bch {

std::vector<LieTerm> dynkin_substitute(NCSeries const &z)
{
	std::vector<LieTerm> out;
	if (z.is_zero())
		return out;
	std::size_t n = z.terms().begin()->first.length();
	if (n == 0)
		throw std::invalid_argument("Dynkin substitution of a constant");
	Rational inv_n(1, static_cast<std::int64_t>(n));
	for (auto const &[w, c] : z.terms())
	{
		if (w.length() != n)
			throw std::invalid_argument(
			    "Dynkin substitution needs a homogeneous series");
		out.push_back({c * inv_n, w});
	}
	return out;
}

namespace {

// [S, c] = S c - c S, applied to a word combination.
std::map<Word, Rational> bracket_with(std::map<Word, Rational> const &s,
                                      std::uint8_t letter)
{
	std::map<Word, Rational> r;
	auto accumulate = [&r](Word w, Rational const &c) {
		auto [it, inserted] = r.try_emplace(std::move(w), c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				r.erase(it);
		}
	};
	for (auto const &[w, c] : s)
	{
		Word right = w;
		right.letters.push_back(letter);
		accumulate(std::move(right), c);
		Word left;
		left.letters.reserve(w.length() + 1);
		left.letters.push_back(letter);
		left.letters.insert(left.letters.end(), w.letters.begin(),
		                    w.letters.end());
		accumulate(std::move(left), -c);
	}
	return r;
}

} // namespace

NCSeries expand_commutators(std::span<LieTerm const> terms,
                            Alphabet const &alphabet)
{
	int degree = 0;
	for (auto const &t : terms)
	{
		if (t.word.length() == 0)
			throw std::invalid_argument("commutator over an empty word");
		degree = std::max(degree, static_cast<int>(t.word.length()));
	}
	NCSeries out(alphabet, degree);
	for (auto const &t : terms)
	{
		std::map<Word, Rational> s{{Word({t.word.letters[0]}), t.coefficient}};
		for (std::size_t i = 1; i < t.word.length(); ++i)
			s = bracket_with(s, t.word.letters[i]);
		for (auto const &[w, c] : s)
			out.add(w, c);
	}
	return out;
}

} // namespace bch
