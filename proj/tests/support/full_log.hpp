#pragma once

#include "bch/nilmatrix.hpp"

// Whole-matrix exp and log of unit-upper-triangular matrices, for round-trip
// tests only. The library itself only ever needs the upper-right entry.
namespace bch::testing {

inline TriMatrix full_exp(TriMatrix const &a)
{
	auto id = TriMatrix::identity(a.order(), a.families());
	TriMatrix result = id;
	TriMatrix power = id;
	for (int k = 1; k <= a.order(); ++k)
	{
		power = power * a;
		result += power.scaled(inverse_factorial(k));
	}
	return result;
}

inline TriMatrix full_log(TriMatrix const &p)
{
	auto id = TriMatrix::identity(p.order(), p.families());
	auto d = p - id;
	TriMatrix result(p.order(), p.families());
	TriMatrix power = id;
	for (int q = 1; q <= p.order(); ++q)
	{
		power = power * d;
		result += power.scaled(Rational(q % 2 == 1 ? 1 : -1, q));
	}
	return result;
}

inline TriMatrix matrix_power(TriMatrix const &a, int k)
{
	TriMatrix r = TriMatrix::identity(a.order(), a.families());
	for (int i = 0; i < k; ++i)
		r = r * a;
	return r;
}

} // namespace bch::testing
