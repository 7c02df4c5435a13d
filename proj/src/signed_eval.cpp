#include "bch/signed_eval.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <thread>

namespace bch {

namespace {

void check_order(int n)
{
	if (n < 1 || n > SignAssignment::kMaxOrder)
		throw std::invalid_argument("sign lattice order must be in 1.." +
		                            std::to_string(SignAssignment::kMaxOrder));
}

std::uint32_t reverse_bits(std::uint32_t mask, int n)
{
	std::uint32_t r = 0;
	for (int i = 0; i < n; ++i)
		if (mask & (1u << i))
			r |= 1u << (n - 1 - i);
	return r;
}

unsigned resolve_workers(unsigned workers)
{
	if (workers == 0)
		workers = std::max(1u, std::thread::hardware_concurrency());
	return workers;
}

} // namespace

SignAssignment::SignAssignment(int n, std::uint32_t negative_mask)
    : n_(n), mask_(negative_mask)
{
	check_order(n);
	if (n < 32 && (negative_mask >> n) != 0)
		throw std::invalid_argument("sign mask wider than the order");
}

SignAssignment SignAssignment::from_signs(std::span<int const> signs)
{
	std::uint32_t mask = 0;
	for (std::size_t i = 0; i < signs.size(); ++i)
	{
		if (signs[i] != 1 && signs[i] != -1)
			throw std::invalid_argument("sign entries must be +1 or -1");
		if (signs[i] < 0)
			mask |= 1u << i;
	}
	return SignAssignment(static_cast<int>(signs.size()), mask);
}

int SignAssignment::sign(int position) const
{
	if (position < 1 || position > n_)
		throw std::out_of_range("sign position out of range");
	return (mask_ >> (position - 1)) & 1u ? -1 : 1;
}

std::vector<int> SignAssignment::signs() const
{
	std::vector<int> s(n_);
	for (int i = 1; i <= n_; ++i)
		s[i - 1] = sign(i);
	return s;
}

int SignAssignment::plus_count() const { return n_ - std::popcount(mask_); }

SignAssignment SignAssignment::reversed() const
{
	return SignAssignment(n_, reverse_bits(mask_, n_));
}

std::string SignAssignment::str() const
{
	std::string s = "(";
	for (int i = 1; i <= n_; ++i)
	{
		if (i > 1)
			s += ',';
		s += sign(i) > 0 ? "+1" : "-1";
	}
	return s + ")";
}

Rational eval_assignment(int n, SignAssignment const &s)
{
	if (s.order() != n)
		throw std::invalid_argument("assignment order differs from n");
	int const dim = n + 1;
	std::vector<Rational> inv_fact(dim);
	for (int k = 0; k < dim; ++k)
		inv_fact[k] = inverse_factorial(k);

	// prefix[i] = s_1 * ... * s_i, so prod_{k=i}^{j-1} s_k = prefix[j-1]*prefix[i-1]
	std::vector<int> prefix(dim, 1);
	for (int i = 1; i <= n; ++i)
		prefix[i] = prefix[i - 1] * s.sign(i);

	// D = FG - I, strictly upper triangular, 0-based indices.
	std::vector<Rational> d(std::size_t(dim) * dim);
	for (int i = 0; i < dim; ++i)
		for (int j = i + 1; j < dim; ++j)
		{
			Rational sum;
			for (int k = i; k <= j; ++k)
			{
				Rational term = inv_fact[k - i] * inv_fact[j - k];
				if (prefix[j] * prefix[k] < 0)
					sum -= term;
				else
					sum += term;
			}
			d[std::size_t(i) * dim + j] = std::move(sum);
		}

	std::vector<Rational> row(dim), next(dim);
	row[0] = Rational(1);
	Rational result;
	for (int q = 1; q <= n; ++q)
	{
		for (int j = 0; j < dim; ++j)
		{
			next[j] = Rational();
			for (int k = q - 1; k < j; ++k)
				if (!row[k].is_zero())
					next[j] += row[k] * d[std::size_t(k) * dim + j];
		}
		std::swap(row, next);
		Rational c(q % 2 == 1 ? 1 : -1, q);
		result += row[n] * c;
	}
	return result;
}

SignedCoefficientTable::SignedCoefficientTable(int n, Pruning pruning)
    : n_(n), pruning_(pruning)
{
	check_order(n);
	values_.resize(std::size_t(1) << n);
	origins_.assign(values_.size(), ValueOrigin::missing);
}

bool SignedCoefficientTable::complete() const
{
	return std::all_of(values_.begin(), values_.end(),
	                   [](auto const &v) { return v.has_value(); });
}

std::optional<Rational> const &
SignedCoefficientTable::at(std::uint32_t code) const
{
	return values_.at(code);
}

Rational const &SignedCoefficientTable::value(SignAssignment const &s) const
{
	if (s.order() != n_)
		throw std::invalid_argument("assignment order differs from table");
	auto const &v = values_.at(s.code());
	if (!v)
		throw std::out_of_range("table entry " + s.str() + " is missing");
	return *v;
}

void SignedCoefficientTable::set(std::uint32_t code, Rational v,
                                 ValueOrigin origin)
{
	values_.at(code) = std::move(v);
	origins_.at(code) = origin;
}

bool SignedCoefficientTable::same_values(SignedCoefficientTable const &o) const
{
	return n_ == o.n_ && values_ == o.values_;
}

SignedCoefficientTable build_table(int n, Pruning pruning, unsigned workers)
{
	SignedCoefficientTable table(n, pruning);
	std::uint32_t const total = std::uint32_t(1) << n;

	auto needs_evaluation = [&](std::uint32_t code) {
		if (pruning == Pruning::none)
			return true;
		SignAssignment s(n, code);
		if (s.plus_count() % 2 == 0)
			return false;
		return code <= reverse_bits(code, n);
	};

	// Gray-code walk, contiguous shards of the walk index per worker. Each
	// code is written by exactly one worker.
	std::vector<std::optional<Rational>> results(total);
	auto run_shard = [&](std::uint32_t begin, std::uint32_t end) {
		for (std::uint32_t i = begin; i < end; ++i)
		{
			std::uint32_t code = i ^ (i >> 1);
			if (needs_evaluation(code))
				results[code] = eval_assignment(n, SignAssignment(n, code));
		}
	};
	unsigned const shards =
	    std::min<std::uint32_t>(resolve_workers(workers), total);
	if (shards <= 1)
		run_shard(0, total);
	else
	{
		std::vector<std::jthread> threads;
		std::uint32_t const step = (total + shards - 1) / shards;
		for (std::uint32_t begin = 0; begin < total; begin += step)
			threads.emplace_back(run_shard, begin,
			                     std::min(total, begin + step));
	}

	Rational const reversal_sign(n % 2 == 1 ? 1 : -1);
	for (std::uint32_t code = 0; code < total; ++code)
	{
		if (results[code])
			table.set(code, std::move(*results[code]), ValueOrigin::evaluated);
		else if (SignAssignment(n, code).plus_count() % 2 == 0)
			table.set(code, Rational(), ValueOrigin::parity_zero);
	}
	for (std::uint32_t code = 0; code < total; ++code)
		if (!table.at(code))
		{
			auto const &partner = table.at(reverse_bits(code, n));
			table.set(code, *partner * reversal_sign, ValueOrigin::reversal);
		}
	return table;
}

NCSeries reconstruct_term(int n, SignedCoefficientTable const &table)
{
	if (table.order() != n)
		throw std::invalid_argument("table order differs from n");
	if (!table.complete())
		throw std::invalid_argument("sign table is incomplete");

	// coefficient(W) = 2^{-n} sum_s value(s) prod_{i: W_i = y} s_i. With
	// s_i = (-1)^{bit i of code} this is a Walsh-Hadamard transform over
	// the code, indexed by the y-positions of W.
	std::size_t const total = table.size();
	std::vector<Rational> h(total);
	for (std::size_t code = 0; code < total; ++code)
		h[code] = *table.at(static_cast<std::uint32_t>(code));
	for (std::size_t len = 1; len < total; len <<= 1)
		for (std::size_t i = 0; i < total; i += len << 1)
			for (std::size_t j = i; j < i + len; ++j)
			{
				Rational u = h[j];
				h[j] += h[j + len];
				h[j + len] = u - h[j + len];
			}

	Rational const scale(1, std::int64_t(total));
	NCSeries z(Alphabet::standard(2), n);
	for (std::size_t ymask = 0; ymask < total; ++ymask)
	{
		if (h[ymask].is_zero())
			continue;
		Word w;
		for (int i = 0; i < n; ++i)
			w.letters.push_back((ymask >> i) & 1u);
		z.add(w, h[ymask] * scale);
	}
	return z;
}

ScanRow scan_order(int n, unsigned workers)
{
	auto table = build_table(n, Pruning::symmetry, workers);
	ScanRow row;
	row.n = n;
	row.assignments = table.size();
	for (std::uint32_t code = 0; code < table.size(); ++code)
	{
		SignAssignment s(n, code);
		auto origin = table.origin(code);
		if (origin == ValueOrigin::evaluated)
			++row.evaluations;
		if (origin == ValueOrigin::parity_zero)
		{
			++row.parity_zeros;
			continue;
		}
		bool const zero = table.at(code)->is_zero();
		if (s.all_plus() && n % 2 == 1 && n > 1)
		{
			if (zero)
				++row.structural_zeros;
			else
				row.structural_violations.push_back(s);
		}
		else if (zero)
			row.unexpected_zeros.push_back(s);
		else
			++row.nonzero;
	}
	return row;
}

std::vector<ScanRow> scan_nonvanishing(int n_max, unsigned workers)
{
	if (n_max < 1)
		throw std::invalid_argument("scan needs n_max >= 1");
	std::vector<ScanRow> rows;
	for (int n = 1; n <= n_max; ++n)
		rows.push_back(scan_order(n, workers));
	return rows;
}

} // namespace bch
