#include "bch/words.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace bch {

Alphabet::Alphabet(std::vector<std::string> letters)
    : letters_(std::move(letters))
{
	if (letters_.size() < 2)
		throw std::invalid_argument("alphabet needs at least two letters");
	if (letters_.size() > 255)
		throw std::invalid_argument("alphabet too large");
	for (auto const &name : letters_)
	{
		if (name.empty())
			throw std::invalid_argument("empty letter name");
		for (char c : name)
			if (!std::isgraph(static_cast<unsigned char>(c)) || c == ',' ||
			    c == '[' || c == ']')
				throw std::invalid_argument("letter name '" + name +
				                            "' has a reserved character");
	}
	for (std::size_t i = 0; i < letters_.size(); ++i)
		for (std::size_t j = 0; j < letters_.size(); ++j)
			if (i != j && letters_[j].starts_with(letters_[i]))
				throw std::invalid_argument(
				    "letter names must be distinct and prefix-free: '" +
				    letters_[i] + "', '" + letters_[j] + "'");
}

Alphabet Alphabet::standard(int size)
{
	std::vector<std::string> names{"x", "y", "w"};
	for (char c = 'a'; static_cast<int>(names.size()) < size; ++c)
	{
		if (c > 'z')
			throw std::invalid_argument("no default names beyond 26 letters");
		if (c != 'x' && c != 'y' && c != 'w')
			names.emplace_back(1, c);
	}
	names.resize(size);
	return Alphabet(std::move(names));
}

int Alphabet::index_of(std::string_view name) const
{
	auto it = std::find(letters_.begin(), letters_.end(), name);
	if (it == letters_.end())
		throw std::invalid_argument("unknown letter '" + std::string(name) +
		                            "'");
	return static_cast<int>(it - letters_.begin());
}

Word Word::reversed() const
{
	return Word(std::vector<std::uint8_t>(letters.rbegin(), letters.rend()));
}

Word Word::parse(std::string_view text, Alphabet const &alphabet)
{
	Word w;
	while (!text.empty())
	{
		int match = -1;
		for (int i = 0; i < alphabet.size(); ++i)
			if (text.starts_with(alphabet.name(i)))
				match = i;
		if (match < 0)
			throw std::invalid_argument("word '" + std::string(text) +
			                            "' does not match the alphabet");
		w.letters.push_back(static_cast<std::uint8_t>(match));
		text.remove_prefix(alphabet.name(match).size());
	}
	return w;
}

std::string Word::str(Alphabet const &alphabet) const
{
	std::string s;
	for (auto l : letters)
		s += alphabet.name(l);
	return s;
}

NCSeries::NCSeries(Alphabet alphabet, int max_degree)
    : alphabet_(std::move(alphabet)), max_degree_(max_degree)
{
	if (max_degree < 0)
		throw std::invalid_argument("negative series degree");
}

void NCSeries::check_word(Word const &w) const
{
	if (static_cast<int>(w.length()) > max_degree_)
		throw std::invalid_argument("word longer than series degree");
	for (auto l : w.letters)
		if (l >= alphabet_.size())
			throw std::invalid_argument("letter outside the alphabet");
}

Rational NCSeries::coefficient(Word const &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Rational() : it->second;
}

Rational NCSeries::coefficient(std::string_view word) const
{
	return coefficient(Word::parse(word, alphabet_));
}

void NCSeries::add(Word const &w, Rational const &c)
{
	if (c.is_zero())
		return;
	check_word(w);
	auto [it, inserted] = terms_.try_emplace(w, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

NCSeries NCSeries::relabeled(Alphabet alphabet) const
{
	if (alphabet.size() != alphabet_.size())
		throw std::invalid_argument("relabeling must keep the alphabet size");
	NCSeries r(std::move(alphabet), max_degree_);
	r.terms_ = terms_;
	return r;
}

std::string to_string(NCSeries const &s)
{
	if (s.is_zero())
		return "0";
	std::string out;
	for (auto const &[w, c] : s.terms())
	{
		if (!out.empty())
			out += " + ";
		out += c.str() + " " + (w.length() ? w.str(s.alphabet()) : "1");
	}
	return out;
}

} // namespace bch
