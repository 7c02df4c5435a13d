#pragma once

#include <cstddef>
#include <span>

#include "bch/multilinear.hpp"
#include "bch/series.hpp"
#include "bch/words.hpp"

namespace bch {

/// Maps each monomial to the word with letter k wherever a family-k variable
/// sits and letter 0 elsewhere; coefficients carry over unchanged.
NCSeries t_operator(MultilinearPoly const &p, Alphabet const &alphabet);

/// Order-n term of log(e^x e^y) over the alphabet {x, y}.
NCSeries bch_term(int n);

/// Order-n term of log(e^{a_0} e^{a_1} ... e^{a_{m-1}}) over the standard
/// m-letter alphabet.
NCSeries bch_term_multi(int n, int m);

/// Order-n term of log(f_0(a_0) f_1(a_1) ...). One series per factor; the
/// number of factors is f_list.size().
NCSeries logf_term(int n, std::span<SeriesSpec const> f_list);

/// Terms are memoized in-process by (n, factor count, series fingerprints).
/// The cache is shared between threads.
void clear_term_cache();
std::size_t term_cache_size();

} // namespace bch
