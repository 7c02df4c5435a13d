#include "bch/oracle.hpp"

#include <stdexcept>
#include <string>

namespace bch::oracle {

TruncatedNCSeries::TruncatedNCSeries(Alphabet alphabet, int max_degree)
    : alphabet_(std::move(alphabet)), max_degree_(max_degree)
{
	if (max_degree < 0)
		throw std::invalid_argument("negative truncation degree");
}

TruncatedNCSeries TruncatedNCSeries::scalar(Alphabet alphabet, int max_degree,
                                            Rational c)
{
	TruncatedNCSeries s(std::move(alphabet), max_degree);
	s.add(Word(), c);
	return s;
}

TruncatedNCSeries TruncatedNCSeries::letter(Alphabet alphabet, int max_degree,
                                            int index)
{
	if (index < 0 || index >= alphabet.size())
		throw std::invalid_argument("letter index outside the alphabet");
	TruncatedNCSeries s(std::move(alphabet), max_degree);
	s.add(Word({static_cast<std::uint8_t>(index)}), Rational(1));
	return s;
}

Rational TruncatedNCSeries::coefficient(Word const &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? Rational() : it->second;
}

void TruncatedNCSeries::add(Word const &w, Rational const &c)
{
	if (c.is_zero() || static_cast<int>(w.length()) > max_degree_)
		return;
	auto [it, inserted] = terms_.try_emplace(w, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

static void check_same_space(TruncatedNCSeries const &a,
                             TruncatedNCSeries const &b)
{
	if (!(a.alphabet() == b.alphabet()))
		throw std::invalid_argument("series over different alphabets");
	if (a.max_degree() != b.max_degree())
		throw std::invalid_argument("series truncated at different degrees");
}

TruncatedNCSeries &TruncatedNCSeries::operator+=(TruncatedNCSeries const &o)
{
	check_same_space(*this, o);
	for (auto const &[w, c] : o.terms_)
		add(w, c);
	return *this;
}

TruncatedNCSeries &TruncatedNCSeries::operator-=(TruncatedNCSeries const &o)
{
	check_same_space(*this, o);
	for (auto const &[w, c] : o.terms_)
		add(w, -c);
	return *this;
}

TruncatedNCSeries TruncatedNCSeries::scaled(Rational const &c) const
{
	TruncatedNCSeries s(alphabet_, max_degree_);
	for (auto const &[w, v] : terms_)
		s.add(w, v * c);
	return s;
}

NCSeries TruncatedNCSeries::slice(int degree) const
{
	NCSeries s(alphabet_, degree);
	for (auto const &[w, c] : terms_)
		if (static_cast<int>(w.length()) == degree)
			s.add(w, c);
	return s;
}

TruncatedNCSeries nc_mul(TruncatedNCSeries const &a,
                         TruncatedNCSeries const &b)
{
	check_same_space(a, b);
	TruncatedNCSeries r(a.alphabet(), a.max_degree());
	for (auto const &[wa, ca] : a.terms())
		for (auto const &[wb, cb] : b.terms())
		{
			if (static_cast<int>(wa.length() + wb.length()) > a.max_degree())
				continue;
			Word w = wa;
			w.letters.insert(w.letters.end(), wb.letters.begin(),
			                 wb.letters.end());
			r.add(w, ca * cb);
		}
	return r;
}

TruncatedNCSeries nc_apply(SeriesSpec const &f, TruncatedNCSeries const &a)
{
	if (!a.constant_term().is_zero())
		throw std::invalid_argument(
		    "series argument must have zero constant term");
	auto one = TruncatedNCSeries::scalar(a.alphabet(), a.max_degree(),
	                                     Rational(1));
	TruncatedNCSeries result = one;
	TruncatedNCSeries power = one;
	for (int k = 1; k <= a.max_degree(); ++k)
	{
		power = nc_mul(power, a);
		result += power.scaled(f.coefficient(k));
	}
	return result;
}

TruncatedNCSeries nc_exp(TruncatedNCSeries const &a)
{
	return nc_apply(SeriesSpec::exponential(), a);
}

TruncatedNCSeries nc_log(TruncatedNCSeries const &a)
{
	if (a.constant_term() != Rational(1))
		throw std::invalid_argument(
		    "logarithm needs constant term exactly 1");
	auto shifted =
	    a - TruncatedNCSeries::scalar(a.alphabet(), a.max_degree(), 1);
	TruncatedNCSeries result(a.alphabet(), a.max_degree());
	TruncatedNCSeries power =
	    TruncatedNCSeries::scalar(a.alphabet(), a.max_degree(), 1);
	for (int q = 1; q <= a.max_degree(); ++q)
	{
		power = nc_mul(power, shifted);
		Rational c(q % 2 == 1 ? 1 : -1, q);
		result += power.scaled(c);
	}
	return result;
}

NCSeries oracle_bch(int n, int factors, std::span<SeriesSpec const> f_list)
{
	if (n < 1)
		throw std::invalid_argument("order must be at least 1");
	if (factors < 2)
		throw std::invalid_argument("need at least two factors");
	if (f_list.size() != 1 && static_cast<int>(f_list.size()) != factors)
		throw std::invalid_argument("need one series per factor, got " +
		                            std::to_string(f_list.size()));
	auto alphabet = Alphabet::standard(factors);
	auto product = TruncatedNCSeries::scalar(alphabet, n, 1);
	for (int k = 0; k < factors; ++k)
	{
		auto const &f = f_list.size() == 1 ? f_list[0] : f_list[k];
		product = nc_mul(
		    product,
		    nc_apply(f, TruncatedNCSeries::letter(alphabet, n, k)));
	}
	return nc_log(product).slice(n);
}

NCSeries oracle_bch(int n, int factors)
{
	SeriesSpec exp = SeriesSpec::exponential();
	return oracle_bch(n, factors, std::span(&exp, 1));
}

} // namespace bch::oracle
