#include "bch/multilinear.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace bch {

namespace {

int digit_width(int families) { return std::bit_width(unsigned(families)); }

void check_order(int order, int families)
{
	if (families < 1)
		throw std::invalid_argument("monomial needs at least one family");
	if (order < 0 || order > Monomial::max_order(families))
		throw std::invalid_argument(
		    "monomial order " + std::to_string(order) +
		    " out of range for " + std::to_string(families) + " families");
}

// Sort by monomial, merge duplicates, drop zeros.
void normalize(std::vector<MultilinearPoly::Term> &terms)
{
	std::sort(terms.begin(), terms.end(),
	          [](auto const &a, auto const &b) { return a.first < b.first; });
	auto out = terms.begin();
	for (auto it = terms.begin(); it != terms.end();)
	{
		auto next = it + 1;
		Rational sum = std::move(it->second);
		while (next != terms.end() && next->first == it->first)
			sum += next++->second;
		if (!sum.is_zero())
		{
			out->first = it->first;
			out->second = std::move(sum);
			++out;
		}
		it = next;
	}
	terms.erase(out, terms.end());
}

} // namespace

int Monomial::max_order(int families) { return 64 / digit_width(families); }

Monomial::Monomial(int order, int families)
{
	check_order(order, families);
	order_ = static_cast<std::uint8_t>(order);
	families_ = static_cast<std::uint8_t>(families);
}

int Monomial::width() const { return digit_width(families_); }

Monomial Monomial::from_positions(int order, std::span<int const> positions,
                                  int family, int families)
{
	std::vector<std::uint8_t> digits(order, 0);
	if (family < 1 || family > families)
		throw std::invalid_argument("family index out of range");
	for (int p : positions)
	{
		if (p < 1 || p > order)
			throw std::invalid_argument("position out of range");
		if (digits[p - 1] != 0)
			throw OverlapError("position listed twice");
		digits[p - 1] = static_cast<std::uint8_t>(family);
	}
	return from_digits(digits, families);
}

Monomial Monomial::from_digits(std::span<std::uint8_t const> digits,
                               int families)
{
	Monomial m(static_cast<int>(digits.size()), families);
	int w = m.width();
	for (std::size_t i = 0; i < digits.size(); ++i)
	{
		if (digits[i] > families)
			throw std::invalid_argument("family index out of range");
		m.packed_ |= std::uint64_t(digits[i])
		             << (w * (digits.size() - 1 - i));
	}
	return m;
}

int Monomial::family_at(int position) const
{
	if (position < 1 || position > order_)
		throw std::out_of_range("monomial position out of range");
	int w = width();
	return int((packed_ >> (w * (order_ - position))) & ((1u << w) - 1));
}

std::vector<std::uint8_t> Monomial::digits() const
{
	std::vector<std::uint8_t> d(order_);
	for (int i = 1; i <= order_; ++i)
		d[i - 1] = static_cast<std::uint8_t>(family_at(i));
	return d;
}

int Monomial::degree() const { return std::popcount(occupancy()); }

// One bit per occupied position (the low bit of its digit field).
std::uint64_t Monomial::occupancy() const
{
	int w = width();
	std::uint64_t folded = 0;
	for (int k = 0; k < w; ++k)
		folded |= packed_ >> k;
	std::uint64_t low_bits = 0;
	for (int i = 0; i < order_; ++i)
		low_bits |= std::uint64_t(1) << (i * w);
	return folded & low_bits;
}

Monomial operator*(Monomial const &a, Monomial const &b)
{
	if (a.order_ != b.order_ || a.families_ != b.families_)
		throw std::invalid_argument("monomials of different shape");
	if (a.occupancy() & b.occupancy())
		throw OverlapError("multilinear product with overlapping supports");
	Monomial r = a;
	r.packed_ |= b.packed_;
	return r;
}

MultilinearPoly::MultilinearPoly(int order, int families)
    : order_(order), families_(families)
{
	check_order(order, families);
}

MultilinearPoly MultilinearPoly::constant(int order, Rational c, int families)
{
	MultilinearPoly p(order, families);
	if (!c.is_zero())
		p.terms_.emplace_back(Monomial(order, families), std::move(c));
	return p;
}

MultilinearPoly MultilinearPoly::monomial(Monomial m, Rational c)
{
	MultilinearPoly p(m.order(), m.families());
	if (!c.is_zero())
		p.terms_.emplace_back(m, std::move(c));
	return p;
}

MultilinearPoly MultilinearPoly::from_terms(int order, std::vector<Term> terms,
                                            int families)
{
	MultilinearPoly p(order, families);
	for (auto const &t : terms)
		if (t.first.order() != order || t.first.families() != families)
			throw std::invalid_argument("term of different shape");
	normalize(terms);
	p.terms_ = std::move(terms);
	return p;
}

bool MultilinearPoly::is_constant(Rational const &c) const
{
	if (c.is_zero())
		return terms_.empty();
	return terms_.size() == 1 && terms_[0].first.is_identity() &&
	       terms_[0].second == c;
}

Rational MultilinearPoly::coefficient(Monomial const &m) const
{
	auto it = std::lower_bound(
	    terms_.begin(), terms_.end(), m,
	    [](Term const &t, Monomial const &key) { return t.first < key; });
	if (it != terms_.end() && it->first == m)
		return it->second;
	return Rational();
}

void MultilinearPoly::check_compatible(MultilinearPoly const &o) const
{
	if (order_ != o.order_ || families_ != o.families_)
		throw std::invalid_argument("polynomials of different order");
}

MultilinearPoly &MultilinearPoly::operator+=(MultilinearPoly const &o)
{
	check_compatible(o);
	std::vector<Term> merged;
	merged.reserve(terms_.size() + o.terms_.size());
	auto a = terms_.begin();
	auto b = o.terms_.begin();
	while (a != terms_.end() || b != o.terms_.end())
	{
		if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first))
			merged.push_back(std::move(*a++));
		else if (a == terms_.end() || b->first < a->first)
			merged.push_back(*b++);
		else
		{
			Rational s = a->second + b->second;
			if (!s.is_zero())
				merged.emplace_back(a->first, std::move(s));
			++a;
			++b;
		}
	}
	terms_ = std::move(merged);
	return *this;
}

MultilinearPoly &MultilinearPoly::operator-=(MultilinearPoly const &o)
{
	return *this += o.scaled(Rational(-1));
}

MultilinearPoly operator*(MultilinearPoly const &a, MultilinearPoly const &b)
{
	std::pair<MultilinearPoly const *, MultilinearPoly const *> pair{&a, &b};
	a.check_compatible(b);
	return sum_of_products(std::span(&pair, 1), a.order_, a.families_);
}

MultilinearPoly MultilinearPoly::scaled(Rational const &c) const
{
	MultilinearPoly p(order_, families_);
	if (c.is_zero())
		return p;
	p.terms_.reserve(terms_.size());
	for (auto const &[m, v] : terms_)
		p.terms_.emplace_back(m, v * c);
	return p;
}

Rational MultilinearPoly::eval_pm1(std::span<int const> signs) const
{
	if (families_ != 1)
		throw std::invalid_argument(
		    "signed evaluation is defined for two-letter mode only");
	if (static_cast<int>(signs.size()) != order_)
		throw std::invalid_argument("sign vector length differs from order");
	std::uint64_t negative = 0;
	for (int i = 0; i < order_; ++i)
	{
		if (signs[i] != 1 && signs[i] != -1)
			throw std::invalid_argument("sign entries must be +1 or -1");
		if (signs[i] < 0)
			negative |= std::uint64_t(1) << (order_ - 1 - i);
	}
	Rational total;
	for (auto const &[m, c] : terms_)
	{
		if (std::popcount(m.packed() & negative) % 2 == 0)
			total += c;
		else
			total -= c;
	}
	return total;
}

MultilinearPoly sum_of_products(
    std::span<std::pair<MultilinearPoly const *, MultilinearPoly const *> const>
        pairs,
    int order, int families)
{
	std::vector<MultilinearPoly::Term> acc;
	for (auto const &[p, q] : pairs)
	{
		if (p->order() != order || q->order() != order ||
		    p->families() != families || q->families() != families)
			throw std::invalid_argument("polynomials of different order");
		for (auto const &[ma, ca] : p->terms())
			for (auto const &[mb, cb] : q->terms())
				acc.emplace_back(ma * mb, ca * cb);
	}
	return MultilinearPoly::from_terms(order, std::move(acc), families);
}

} // namespace bch
