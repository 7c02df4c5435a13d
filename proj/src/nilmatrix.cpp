#include "bch/nilmatrix.hpp"

#include <stdexcept>
#include <string>

namespace bch {

TriMatrix::TriMatrix(int order, int families)
    : order_(order), families_(families), zero_(order, families)
{
	if (order < 1)
		throw std::invalid_argument("matrix order must be at least 1");
	entries_.assign(std::size_t(dim()) * (dim() + 1) / 2, zero_);
}

TriMatrix TriMatrix::identity(int order, int families)
{
	TriMatrix m(order, families);
	for (int i = 0; i < m.dim(); ++i)
		m.at(i, i) = MultilinearPoly::constant(order, 1, families);
	return m;
}

std::size_t TriMatrix::index(int i, int j) const
{
	// rows i has dim - i entries starting at column i
	return std::size_t(i) * dim() - std::size_t(i) * (i - 1) / 2 + (j - i);
}

MultilinearPoly const &TriMatrix::at(int i, int j) const
{
	if (i < 0 || j < 0 || i >= dim() || j >= dim())
		throw std::out_of_range("matrix index out of range");
	if (i > j)
		return zero_;
	return entries_[index(i, j)];
}

MultilinearPoly &TriMatrix::at(int i, int j)
{
	if (i < 0 || j < 0 || i >= dim() || j >= dim())
		throw std::out_of_range("matrix index out of range");
	if (i > j)
		throw std::out_of_range("lower-triangular entries are fixed at zero");
	return entries_[index(i, j)];
}

bool TriMatrix::has_unit_diagonal() const
{
	for (int i = 0; i < dim(); ++i)
		if (!at(i, i).is_constant(Rational(1)))
			return false;
	return true;
}

void TriMatrix::check_compatible(TriMatrix const &o) const
{
	if (order_ != o.order_ || families_ != o.families_)
		throw std::invalid_argument("matrices of different order");
}

TriMatrix &TriMatrix::operator+=(TriMatrix const &o)
{
	check_compatible(o);
	for (std::size_t k = 0; k < entries_.size(); ++k)
		entries_[k] += o.entries_[k];
	return *this;
}

TriMatrix &TriMatrix::operator-=(TriMatrix const &o)
{
	check_compatible(o);
	for (std::size_t k = 0; k < entries_.size(); ++k)
		entries_[k] -= o.entries_[k];
	return *this;
}

TriMatrix operator*(TriMatrix const &a, TriMatrix const &b)
{
	a.check_compatible(b);
	TriMatrix r(a.order_, a.families_);
	std::vector<std::pair<MultilinearPoly const *, MultilinearPoly const *>>
	    pairs;
	for (int i = 0; i < a.dim(); ++i)
		for (int j = i; j < a.dim(); ++j)
		{
			pairs.clear();
			for (int k = i; k <= j; ++k)
				pairs.emplace_back(&a.at(i, k), &b.at(k, j));
			r.at(i, j) = sum_of_products(pairs, a.order_, a.families_);
		}
	return r;
}

TriMatrix TriMatrix::scaled(Rational const &c) const
{
	TriMatrix r(order_, families_);
	for (std::size_t k = 0; k < entries_.size(); ++k)
		r.entries_[k] = entries_[k].scaled(c);
	return r;
}

TriMatrix superdiagonal_matrix(int n, int family, int families)
{
	if (family < kBaseFamily || family > families)
		throw std::invalid_argument("family " + std::to_string(family) +
		                            " out of range");
	TriMatrix m(n, families);
	for (int i = 0; i < n; ++i)
	{
		Monomial mono(n, families);
		if (family != kBaseFamily)
			mono = Monomial::from_positions(n, {i + 1}, family, families);
		m.at(i, i + 1) = MultilinearPoly::monomial(mono);
	}
	return m;
}

TriMatrix build_factor_matrix(int n, int family, SeriesSpec const &f,
                              int families)
{
	if (f.coefficient(0) != Rational(1))
		throw std::invalid_argument("series must satisfy f(0) = 1");
	auto a = superdiagonal_matrix(n, family, families);
	auto id = TriMatrix::identity(n, families);
	// Horner: c_0 + A(c_1 + A(c_2 + ...)); A^{n+1} = 0 so c_n is the last
	// coefficient that can contribute.
	TriMatrix r = id.scaled(f.coefficient(n));
	for (int k = n - 1; k >= 0; --k)
		r = a * r + id.scaled(f.coefficient(k));
	return r;
}

MultilinearPoly log_upper_right(TriMatrix const &p)
{
	if (!p.has_unit_diagonal())
		throw std::invalid_argument("logarithm needs a unit diagonal");
	int const n = p.order();
	int const families = p.families();
	auto d = p - TriMatrix::identity(n, families);

	// row holds the first row of (p - I)^q
	std::vector<MultilinearPoly> row(p.dim(), MultilinearPoly(n, families));
	row[0] = MultilinearPoly::constant(n, 1, families);
	MultilinearPoly result(n, families);
	std::vector<std::pair<MultilinearPoly const *, MultilinearPoly const *>>
	    pairs;
	for (int q = 1; q <= n; ++q)
	{
		std::vector<MultilinearPoly> next(p.dim(),
		                                  MultilinearPoly(n, families));
		// (p - I)^q has nonzero entries only from column q onwards
		for (int j = q; j <= n; ++j)
		{
			pairs.clear();
			for (int k = q - 1; k < j; ++k)
				pairs.emplace_back(&row[k], &d.at(k, j));
			next[j] = sum_of_products(pairs, n, families);
		}
		row = std::move(next);
		result += row[n].scaled(Rational(q % 2 == 1 ? 1 : -1, q));
	}
	return result;
}

MultilinearPoly word_matrix_product(int n, Word const &word)
{
	if (static_cast<int>(word.length()) != n)
		throw std::invalid_argument("word length must equal the order");
	auto m = superdiagonal_matrix(n, kBaseFamily);
	auto nn = superdiagonal_matrix(n, 1);
	auto product = TriMatrix::identity(n);
	for (auto letter : word.letters)
	{
		if (letter > 1)
			throw std::invalid_argument("word letters must be M or N");
		product = product * (letter == 0 ? m : nn);
	}
	return product.at(0, n);
}

} // namespace bch
