#pragma once

#include <span>
#include <vector>

#include "bch/rational.hpp"
#include "bch/words.hpp"

namespace bch {

/// coefficient * [[...[a_1, a_2], a_3] ..., a_k] over the word's letters.
/// A one-letter word is the bare letter.
struct LieTerm
{
	Rational coefficient;
	Word word;

	friend bool operator==(LieTerm const &, LieTerm const &) = default;
};

/// Replaces every degree-n word w (coefficient c) with (c/n) times the
/// left-normed commutator of w. Input must be homogeneous of degree >= 1.
/// No Lie-algebra simplification is attempted.
std::vector<LieTerm> dynkin_substitute(NCSeries const &z);

/// Expands each left-normed commutator into words and sums them.
NCSeries expand_commutators(std::span<LieTerm const> terms,
                            Alphabet const &alphabet);

} // namespace bch
