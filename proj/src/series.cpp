#include "bch/series.hpp"

#include <stdexcept>

namespace bch {

SeriesSpec SeriesSpec::exponential()
{
	SeriesSpec s;
	s.exponential_ = true;
	return s;
}

SeriesSpec::SeriesSpec(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients))
{
	if (coefficients_.empty() || coefficients_.front() != Rational(1))
		throw std::invalid_argument(
		    "series must have constant coefficient 1");
	while (coefficients_.back().is_zero())
		coefficients_.pop_back();
}

SeriesSpec SeriesSpec::parse(std::string_view text)
{
	if (text == "exp")
		return exponential();
	std::vector<Rational> coefficients;
	while (true)
	{
		auto comma = text.find(',');
		coefficients.push_back(Rational::parse(text.substr(0, comma)));
		if (comma == std::string_view::npos)
			break;
		text.remove_prefix(comma + 1);
	}
	return SeriesSpec(std::move(coefficients));
}

Rational SeriesSpec::coefficient(int k) const
{
	if (k < 0)
		return Rational();
	if (exponential_)
		return inverse_factorial(k);
	if (k < static_cast<int>(coefficients_.size()))
		return coefficients_[k];
	return Rational();
}

std::string SeriesSpec::fingerprint() const
{
	if (exponential_)
		return "exp";
	std::string s;
	for (auto const &c : coefficients_)
	{
		if (!s.empty())
			s += ',';
		s += c.str();
	}
	return s;
}

} // namespace bch
