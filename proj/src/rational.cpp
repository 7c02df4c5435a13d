#include "bch/rational.hpp"

#include <cctype>
#include <mutex>
#include <ostream>
#include <vector>

namespace bch {

namespace {

bool is_integer_text(std::string_view s)
{
	if (!s.empty() && (s.front() == '-' || s.front() == '+'))
		s.remove_prefix(1);
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

mpz_class parse_integer(std::string_view s)
{
	if (!is_integer_text(s))
		throw std::invalid_argument("malformed integer '" + std::string(s) +
		                            "'");
	if (s.front() == '+')
		s.remove_prefix(1);
	return mpz_class(std::string(s), 10);
}

mpz_class to_mpz(std::int64_t v)
{
	// mpz_class(long) is 64-bit on LP64 targets
	static_assert(sizeof(long) == sizeof(std::int64_t));
	return mpz_class(static_cast<long>(v));
}

} // namespace

Rational::Rational(std::int64_t value) : value_(to_mpz(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
	if (denominator == 0)
		throw DivisionByZero();
	value_ = mpq_class(to_mpz(numerator), to_mpz(denominator));
	value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
	value_.canonicalize();
}

Rational Rational::from_strings(std::string_view numerator,
                                std::string_view denominator)
{
	mpz_class den = parse_integer(denominator);
	if (den == 0)
		throw DivisionByZero();
	return Rational(mpq_class(parse_integer(numerator), den));
}

Rational Rational::parse(std::string_view text)
{
	auto slash = text.find('/');
	if (slash == std::string_view::npos)
		return Rational(mpq_class(parse_integer(text)));
	return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

std::string Rational::str() const
{
	if (is_integer())
		return numerator();
	return numerator() + "/" + denominator();
}

Rational &Rational::operator+=(Rational const &o)
{
	value_ += o.value_;
	return *this;
}

Rational &Rational::operator-=(Rational const &o)
{
	value_ -= o.value_;
	return *this;
}

Rational &Rational::operator*=(Rational const &o)
{
	value_ *= o.value_;
	return *this;
}

Rational &Rational::operator/=(Rational const &o)
{
	if (o.is_zero())
		throw DivisionByZero();
	value_ /= o.value_;
	return *this;
}

Rational inverse_factorial(int k)
{
	if (k < 0)
		return Rational();
	static std::mutex mutex;
	static std::vector<Rational> table{Rational(1)};
	std::lock_guard lock(mutex);
	while (static_cast<int>(table.size()) <= k)
		table.push_back(table.back() /
		                Rational(static_cast<std::int64_t>(table.size())));
	return table[k];
}

std::ostream &operator<<(std::ostream &os, Rational const &r)
{
	return os << r.str();
}

} // namespace bch
