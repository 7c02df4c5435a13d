#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bch/rational.hpp"

namespace bch {

/// Ordered letter names. Letter 0 is the base letter (x); letter k pairs
/// with variable family k.
class Alphabet
{
  public:
	/// Names must be distinct, nonempty, printable without whitespace or
	/// any of ",[]", and prefix-free so that word strings decode uniquely.
	explicit Alphabet(std::vector<std::string> letters);

	/// x, y, w, then a, b, c, ... skipping the names already used.
	static Alphabet standard(int size);

	int size() const { return static_cast<int>(letters_.size()); }
	std::string const &name(int index) const { return letters_.at(index); }
	std::vector<std::string> const &letters() const { return letters_; }
	int index_of(std::string_view name) const;

	friend bool operator==(Alphabet const &, Alphabet const &) = default;

  private:
	std::vector<std::string> letters_;
};

/// Sequence of letter indices. Ordered graded-lexicographically: shorter
/// words first, then letter by letter.
struct Word
{
	std::vector<std::uint8_t> letters;

	Word() = default;
	explicit Word(std::vector<std::uint8_t> l) : letters(std::move(l)) {}

	std::size_t length() const { return letters.size(); }
	Word reversed() const;
	/// Word spelled from single-character names or prefix-free tokens.
	static Word parse(std::string_view text, Alphabet const &alphabet);
	std::string str(Alphabet const &alphabet) const;

	friend bool operator==(Word const &, Word const &) = default;
	friend std::strong_ordering operator<=>(Word const &a, Word const &b)
	{
		if (auto c = a.letters.size() <=> b.letters.size(); c != 0)
			return c;
		return a.letters <=> b.letters;
	}
};

/// Rational combination of words of length <= max_degree.
class NCSeries
{
  public:
	NCSeries(Alphabet alphabet, int max_degree);

	Alphabet const &alphabet() const { return alphabet_; }
	int max_degree() const { return max_degree_; }
	std::map<Word, Rational> const &terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }

	Rational coefficient(Word const &w) const;
	Rational coefficient(std::string_view word) const;
	/// Adds c to the coefficient of w, erasing it if the sum is zero.
	void add(Word const &w, Rational const &c);

	/// Same words and coefficients under different letter names.
	NCSeries relabeled(Alphabet alphabet) const;

	friend bool operator==(NCSeries const &, NCSeries const &) = default;

  private:
	void check_word(Word const &w) const;

	Alphabet alphabet_;
	int max_degree_;
	std::map<Word, Rational> terms_;
};

/// "c1 w1 + c2 w2 ..." in canonical order, for diagnostics.
std::string to_string(NCSeries const &s);

} // namespace bch
