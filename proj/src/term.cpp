#include "bch/term.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "bch/nilmatrix.hpp"

namespace bch {

namespace {

struct CacheKey
{
	int n;
	std::vector<std::string> fingerprints;
	auto operator<=>(CacheKey const &) const = default;
};

std::mutex cache_mutex;
std::map<CacheKey, NCSeries> cache;

NCSeries compute_term(int n, std::span<SeriesSpec const> f_list)
{
	int const m = static_cast<int>(f_list.size());
	int const families = m - 1;
	if (n > Monomial::max_order(families))
		throw std::invalid_argument("order " + std::to_string(n) +
		                            " too large for " + std::to_string(m) +
		                            " factors");
	auto product = build_factor_matrix(n, kBaseFamily, f_list[0], families);
	for (int k = 1; k < m; ++k)
		product = product * build_factor_matrix(n, k, f_list[k], families);
	return t_operator(log_upper_right(product), Alphabet::standard(m));
}

} // namespace

NCSeries t_operator(MultilinearPoly const &p, Alphabet const &alphabet)
{
	if (p.families() >= alphabet.size())
		throw std::invalid_argument(
		    "polynomial has more variable families than the alphabet has "
		    "non-base letters");
	NCSeries s(alphabet, p.order());
	for (auto const &[mono, c] : p.terms())
		s.add(Word(mono.digits()), c);
	return s;
}

NCSeries logf_term(int n, std::span<SeriesSpec const> f_list)
{
	if (n < 1)
		throw std::invalid_argument("order must be at least 1");
	if (f_list.size() < 2)
		throw std::invalid_argument("need at least two factors");
	if (f_list.size() > 255)
		throw std::invalid_argument("too many factors");

	CacheKey key{n, {}};
	for (auto const &f : f_list)
		key.fingerprints.push_back(f.fingerprint());
	{
		std::lock_guard lock(cache_mutex);
		if (auto it = cache.find(key); it != cache.end())
			return it->second;
	}
	// Computed outside the lock; a concurrent duplicate computes the same
	// value and the first insertion wins.
	NCSeries term = compute_term(n, f_list);
	std::lock_guard lock(cache_mutex);
	return cache.try_emplace(std::move(key), std::move(term)).first->second;
}

NCSeries bch_term_multi(int n, int m)
{
	if (m < 2)
		throw std::invalid_argument("need at least two factors");
	std::vector<SeriesSpec> f(m, SeriesSpec::exponential());
	return logf_term(n, f);
}

NCSeries bch_term(int n) { return bch_term_multi(n, 2); }

void clear_term_cache()
{
	std::lock_guard lock(cache_mutex);
	cache.clear();
}

std::size_t term_cache_size()
{
	std::lock_guard lock(cache_mutex);
	return cache.size();
}

} // namespace bch
