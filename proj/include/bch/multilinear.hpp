#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bch/rational.hpp"

namespace bch {

/// Raised when two monomials that share a variable position are multiplied.
/// The matrix constructions never produce such a product, so this always
/// indicates an internal inconsistency.
class OverlapError : public std::logic_error
{
  public:
	using std::logic_error::logic_error;
};

/// Multilinear monomial over positions 1..order. Each position carries either
/// no variable (family 0) or exactly one variable from family 1..families.
/// With a single family (two-letter mode) this is a plain bitset.
///
/// Positions are packed as fixed-width digits with position 1 in the most
/// significant digit, so comparing the packed integers is lexicographic
/// comparison of the position vectors.
class Monomial
{
  public:
	/// The identity monomial (no variables).
	Monomial(int order, int families = 1);

	/// Variables of `family` at each listed 1-based position.
	static Monomial from_positions(int order, std::span<int const> positions,
	                               int family = 1, int families = 1);
	static Monomial from_positions(int order,
	                               std::initializer_list<int> positions,
	                               int family = 1, int families = 1)
	{
		return from_positions(order, std::span<int const>(positions), family,
		                      families);
	}
	/// digits[i] is the family at position i+1 (0 = none).
	static Monomial from_digits(std::span<std::uint8_t const> digits,
	                            int families = 1);

	/// Largest order representable for a given family count.
	static int max_order(int families);

	int order() const { return order_; }
	int families() const { return families_; }
	int family_at(int position) const;
	int degree() const;
	bool is_identity() const { return packed_ == 0; }
	std::uint64_t packed() const { return packed_; }
	std::vector<std::uint8_t> digits() const;

	/// Union of disjoint supports; throws OverlapError otherwise.
	friend Monomial operator*(Monomial const &a, Monomial const &b);

	friend bool operator==(Monomial const &, Monomial const &) = default;
	friend std::strong_ordering operator<=>(Monomial const &a,
	                                        Monomial const &b)
	{
		if (auto c = a.order_ <=> b.order_; c != 0)
			return c;
		if (auto c = a.families_ <=> b.families_; c != 0)
			return c;
		return a.packed_ <=> b.packed_;
	}

  private:
	std::uint64_t occupancy() const;
	int width() const;

	std::uint64_t packed_ = 0;
	std::uint8_t order_ = 0;
	std::uint8_t families_ = 1;
};

/// Finite sum of multilinear monomials with rational coefficients. Terms are
/// kept sorted by monomial with no zero coefficients, which makes equality
/// structural and display order deterministic.
class MultilinearPoly
{
  public:
	using Term = std::pair<Monomial, Rational>;

	MultilinearPoly(int order, int families = 1);
	static MultilinearPoly constant(int order, Rational c, int families = 1);
	static MultilinearPoly monomial(Monomial m, Rational c = Rational(1));
	/// Sums duplicate monomials and drops zeros.
	static MultilinearPoly from_terms(int order, std::vector<Term> terms,
	                                  int families = 1);

	int order() const { return order_; }
	int families() const { return families_; }
	std::vector<Term> const &terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant(Rational const &c) const;
	Rational coefficient(Monomial const &m) const;

	MultilinearPoly &operator+=(MultilinearPoly const &o);
	MultilinearPoly &operator-=(MultilinearPoly const &o);
	friend MultilinearPoly operator+(MultilinearPoly a,
	                                 MultilinearPoly const &b)
	{
		return a += b;
	}
	friend MultilinearPoly operator-(MultilinearPoly a,
	                                 MultilinearPoly const &b)
	{
		return a -= b;
	}
	friend MultilinearPoly operator*(MultilinearPoly const &a,
	                                 MultilinearPoly const &b);
	MultilinearPoly scaled(Rational const &c) const;

	/// Value with every variable at position i replaced by signs[i-1] (each
	/// +1 or -1). Two-letter mode only.
	Rational eval_pm1(std::span<int const> signs) const;

	friend bool operator==(MultilinearPoly const &,
	                       MultilinearPoly const &) = default;

  private:
	void check_compatible(MultilinearPoly const &o) const;

	std::vector<Term> terms_;
	int order_;
	int families_;
};

/// Sum of products a_k * b_k, normalized once at the end.
MultilinearPoly sum_of_products(
    std::span<std::pair<MultilinearPoly const *, MultilinearPoly const *> const>
        pairs,
    int order, int families);

} // namespace bch
