#pragma once

#include <vector>

#include "bch/multilinear.hpp"
#include "bch/series.hpp"
#include "bch/words.hpp"

namespace bch {

/// Family id of the variable-free base matrix M (and F = f(M)).
inline constexpr int kBaseFamily = 0;

/// Upper-triangular (order+1)x(order+1) matrix of multilinear polynomials.
/// Indices are 0-based here; entry (0, order) is the upper-right element.
class TriMatrix
{
  public:
	TriMatrix(int order, int families = 1);
	static TriMatrix identity(int order, int families = 1);

	int order() const { return order_; }
	int families() const { return families_; }
	int dim() const { return order_ + 1; }

	MultilinearPoly const &at(int i, int j) const;
	/// Only i <= j is writable.
	MultilinearPoly &at(int i, int j);

	bool has_unit_diagonal() const;

	TriMatrix &operator+=(TriMatrix const &o);
	TriMatrix &operator-=(TriMatrix const &o);
	friend TriMatrix operator+(TriMatrix a, TriMatrix const &b)
	{
		return a += b;
	}
	friend TriMatrix operator-(TriMatrix a, TriMatrix const &b)
	{
		return a -= b;
	}
	friend TriMatrix operator*(TriMatrix const &a, TriMatrix const &b);
	TriMatrix scaled(Rational const &c) const;

	friend bool operator==(TriMatrix const &, TriMatrix const &) = default;

  private:
	std::size_t index(int i, int j) const;
	void check_compatible(TriMatrix const &o) const;

	int order_;
	int families_;
	MultilinearPoly zero_;
	// upper triangle, row-major
	std::vector<MultilinearPoly> entries_;
};

inline TriMatrix mat_mul(TriMatrix const &a, TriMatrix const &b)
{
	return a * b;
}

/// M (family = kBaseFamily) with ones on the superdiagonal, or N with
/// variable (family, i) at entry (i, i+1).
TriMatrix superdiagonal_matrix(int n, int family, int families = 1);

/// f(M) or f(N_family). With f = exp this is F or G (H, ...).
TriMatrix build_factor_matrix(int n, int family, SeriesSpec const &f,
                              int families = 1);

/// Entry (1, n+1) of log p for a unit-diagonal p, using only the first row
/// of each power of (p - I).
MultilinearPoly log_upper_right(TriMatrix const &p);

/// Upper-right entry of the product of M (letter 0) and N (letter 1) matrices
/// spelled by the word.
MultilinearPoly word_matrix_product(int n, Word const &word);

} // namespace bch
