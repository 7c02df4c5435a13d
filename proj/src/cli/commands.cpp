#include "bch/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "bch/cli/cache.hpp"
#include "bch/dynkin.hpp"
#include "bch/oracle.hpp"
#include "bch/signed_eval.hpp"
#include "bch/term.hpp"

namespace bch::cli {

namespace {

std::vector<SeriesSpec> resolve_series(TermOptions const &o)
{
	if (o.series.empty())
		return std::vector<SeriesSpec>(o.factors, SeriesSpec::exponential());
	if (o.series.size() != 1 && static_cast<int>(o.series.size()) != o.factors)
		throw std::invalid_argument(
		    fmt::format("expected 1 or {} series specs, got {}", o.factors,
		                o.series.size()));
	std::vector<SeriesSpec> specs;
	for (auto const &s : o.series)
		specs.push_back(SeriesSpec::parse(s));
	if (specs.size() == 1)
		specs.resize(o.factors, specs.front());
	return specs;
}

Alphabet resolve_alphabet(TermOptions const &o)
{
	if (o.letters.empty())
		return Alphabet::standard(o.factors);
	if (static_cast<int>(o.letters.size()) != o.factors)
		throw std::invalid_argument(fmt::format(
		    "expected {} letter names, got {}", o.factors, o.letters.size()));
	return Alphabet(o.letters);
}

void validate(TermOptions const &o)
{
	if (o.order < 1)
		throw std::invalid_argument("order must be at least 1");
	if (o.factors < 2)
		throw std::invalid_argument("need at least two factors");
}

struct Difference
{
	std::string word;
	Rational left;
	Rational right;
};

std::optional<Difference> first_difference(NCSeries const &a,
                                           NCSeries const &b)
{
	std::set<Word> words;
	for (auto const &t : a.terms())
		words.insert(t.first);
	for (auto const &t : b.terms())
		words.insert(t.first);
	for (auto const &w : words)
	{
		auto ca = a.coefficient(w);
		auto cb = b.coefficient(w);
		if (ca != cb)
			return Difference{w.str(a.alphabet()), ca, cb};
	}
	return std::nullopt;
}

std::string describe(std::optional<Difference> const &d,
                     std::string_view left, std::string_view right)
{
	return fmt::format("first differing word {}: {} {}, {} {}", d->word,
	                   left, d->left.str(), right, d->right.str());
}

// Returns an empty string on success, else a failure description.
using Check = std::function<std::string(int)>;

std::string check_oracle(int n)
{
	auto d = first_difference(bch_term(n), oracle::oracle_bch(n, 2));
	return d ? describe(d, "matrix", "oracle") : "";
}

std::string check_multi(int n)
{
	auto d = first_difference(bch_term_multi(n, 3), oracle::oracle_bch(n, 3));
	return d ? describe(d, "matrix", "oracle") : "";
}

std::string check_logf(int n)
{
	std::vector<SeriesSpec> f{SeriesSpec::parse("1,1"),
	                          SeriesSpec::parse("1,2,-1/3")};
	auto d = first_difference(logf_term(n, f), oracle::oracle_bch(n, 2, f));
	return d ? describe(d, "matrix", "oracle") : "";
}

std::string check_signed(int n, unsigned workers)
{
	auto table = build_table(n, Pruning::symmetry, workers);
	auto d = first_difference(reconstruct_term(n, table), bch_term(n));
	return d ? describe(d, "signed", "matrix") : "";
}

std::string check_dynkin(int n)
{
	auto z = bch_term(n);
	auto lie = dynkin_substitute(z);
	auto d = first_difference(expand_commutators(lie, z.alphabet()), z);
	return d ? describe(d, "expanded", "matrix") : "";
}

std::string check_symmetry(int n, unsigned workers)
{
	auto z = bch_term(n);
	Rational const parity(n % 2 == 1 ? 1 : -1);
	for (auto const &[w, c] : z.terms())
	{
		if (static_cast<int>(w.length()) != n)
			return fmt::format("word {} has length {}", w.str(z.alphabet()),
			                   w.length());
		Word swapped = w;
		for (auto &l : swapped.letters)
			l = 1 - l;
		if (z.coefficient(swapped) != c * parity)
			return fmt::format("swap identity fails at {}",
			                   w.str(z.alphabet()));
		if (z.coefficient(w.reversed()) != c * parity)
			return fmt::format("reversal identity fails at {}",
			                   w.str(z.alphabet()));
	}
	auto table = build_table(n, Pruning::none, workers);
	for (std::uint32_t code = 0; code < table.size(); ++code)
	{
		SignAssignment s(n, code);
		auto const &v = *table.at(code);
		if (s.plus_count() % 2 == 0 && !v.is_zero())
			return fmt::format("even +1 count does not vanish at {}", s.str());
		if (s.all_plus() && n > 1 && !v.is_zero())
			return fmt::format("all-plus value does not vanish at n={}", n);
		if (table.value(s.reversed()) != v * parity)
			return fmt::format("value reversal fails at {}", s.str());
	}
	return "";
}

void write_output(std::string const &payload,
                  std::optional<std::filesystem::path> const &path,
                  std::ostream &out)
{
	if (!path)
	{
		out << payload;
		return;
	}
	std::ofstream file(*path, std::ios::binary | std::ios::trunc);
	if (!file)
		throw std::filesystem::filesystem_error(
		    "cannot open output file", *path,
		    std::make_error_code(std::errc::io_error));
	file << payload;
	file.close();
	if (!file)
		throw std::filesystem::filesystem_error(
		    "cannot write output file", *path,
		    std::make_error_code(std::errc::io_error));
}

} // namespace

OutputDocument compute_document(TermOptions const &options)
{
	validate(options);
	auto series = resolve_series(options);
	auto alphabet = resolve_alphabet(options);
	NCSeries z = logf_term(options.order, series).relabeled(alphabet);
	std::vector<std::string> fingerprints;
	for (auto const &s : series)
		fingerprints.push_back(s.fingerprint());
	if (options.dynkin)
	{
		auto lie = dynkin_substitute(z);
		return make_document(z, fingerprints, &lie);
	}
	return make_document(z, fingerprints);
}

int run_term(TermOptions const &options, std::ostream &out, std::ostream &err)
{
	std::optional<OutputDocument> doc;
	std::optional<DocumentCache> cache;
	std::string key;
	try
	{
		validate(options);
		auto series = resolve_series(options);
		auto alphabet = resolve_alphabet(options);
		if (options.use_cache)
		{
			auto dir = options.cache_dir ? options.cache_dir
			                             : DocumentCache::default_directory();
			if (dir)
			{
				cache.emplace(*dir);
				DocumentCache::Request request{"term", options.order,
				                               options.factors, {},
				                               alphabet.letters(),
				                               options.dynkin};
				for (auto const &s : series)
					request.series.push_back(s.fingerprint());
				key = DocumentCache::key(request);
				doc = cache->load(key);
			}
		}
		if (!doc)
		{
			doc = compute_document(options);
			if (cache)
			{
				try
				{
					cache->store(key, *doc);
				}
				catch (std::exception const &e)
				{
					fmt::print(err, "warning: cache not updated: {}\n",
					           e.what());
				}
			}
		}
	}
	catch (std::logic_error const &e)
	{
		// invalid_argument, or DivisionByZero from a series like "1,1/0"
		fmt::print(err, "error: {}\n", e.what());
		return kInvalidArguments;
	}

	try
	{
		write_output(render(*doc, options.format), options.out, out);
	}
	catch (std::exception const &e)
	{
		fmt::print(err, "error: {}\n", e.what());
		return kIoFailure;
	}
	return kSuccess;
}

int run_verify(VerifyOptions const &options, std::ostream &out,
               std::ostream &err)
{
	static std::vector<std::string> const all_modes{
	    "oracle", "multi", "logf", "signed", "dynkin", "symmetry"};
	std::vector<std::string> modes =
	    options.modes.empty() ? all_modes : options.modes;
	for (auto const &m : modes)
		if (std::find(all_modes.begin(), all_modes.end(), m) ==
		    all_modes.end())
		{
			fmt::print(err, "error: unknown verify mode '{}'\n", m);
			return kInvalidArguments;
		}
	if (options.n_max < 1)
	{
		fmt::print(err, "error: n_max must be at least 1\n");
		return kInvalidArguments;
	}
	bool const uses_oracle =
	    std::any_of(modes.begin(), modes.end(), [](auto const &m) {
		    return m == "oracle" || m == "multi" || m == "logf";
	    });
	if (uses_oracle && options.n_max > kOracleLimit)
	{
		fmt::print(err, "error: oracle modes are limited to n <= {}\n",
		           kOracleLimit);
		return kInvalidArguments;
	}
	if (options.n_max > SignAssignment::kMaxOrder)
	{
		fmt::print(err, "error: n_max must be at most {}\n",
		           SignAssignment::kMaxOrder);
		return kInvalidArguments;
	}

	int failures = 0;
	for (auto const &mode : modes)
	{
		// the three-factor oracle grows as 3^n, so it stops earlier
		int const limit = mode == "multi" ? std::min(options.n_max, 6)
		                                  : options.n_max;
		for (int n = 1; n <= limit; ++n)
		{
			std::string failure;
			if (mode == "oracle")
				failure = check_oracle(n);
			else if (mode == "multi")
				failure = check_multi(n);
			else if (mode == "logf")
				failure = check_logf(n);
			else if (mode == "signed")
				failure = check_signed(n, options.workers);
			else if (mode == "dynkin")
				failure = check_dynkin(n);
			else
				failure = check_symmetry(n, options.workers);
			if (failure.empty())
				fmt::print(out, "{:<8} n={:<2} PASS\n", mode, n);
			else
			{
				++failures;
				fmt::print(out, "{:<8} n={:<2} FAIL {}\n", mode, n, failure);
				fmt::print(err, "{} n={}: {}\n", mode, n, failure);
			}
		}
		if (mode == "oracle" && options.n_max >= 7)
		{
			Word spot = Word::parse("yxxxyyy", Alphabet::standard(2));
			fmt::print(out, "oracle   spot yxxxyyy: matrix {}, oracle {}\n",
			           bch_term(7).coefficient(spot).str(),
			           oracle::oracle_bch(7, 2).coefficient(spot).str());
		}
	}
	fmt::print(out, "{}\n", failures == 0 ? "all checks passed"
	                                      : fmt::format("{} checks failed",
	                                                    failures));
	return failures == 0 ? kSuccess : kMismatch;
}

int run_scan(ScanOptions const &options, std::ostream &out, std::ostream &err)
{
	if (options.n_max < 1 || options.n_max > SignAssignment::kMaxOrder)
	{
		fmt::print(err, "error: n_max must be in 1..{}\n",
		           SignAssignment::kMaxOrder);
		return kInvalidArguments;
	}
	bool clean = true;
	nlohmann::json rows = nlohmann::json::array();
	if (!options.json)
		fmt::print(out, "{:>3} {:>11} {:>10} {:>12} {:>15} {:>9} {:>10}\n",
		           "n", "assignments", "evaluated", "parity_zero",
		           "structural_zero", "nonzero", "unexpected");
	for (int n = 1; n <= options.n_max; ++n)
	{
		auto row = scan_order(n, options.workers);
		clean = clean && row.clean();
		std::size_t const unexpected =
		    row.unexpected_zeros.size() + row.structural_violations.size();
		if (options.json)
			rows.push_back({{"n", n},
			                {"assignments", row.assignments},
			                {"evaluated", row.evaluations},
			                {"parity_zero", row.parity_zeros},
			                {"structural_zero", row.structural_zeros},
			                {"nonzero", row.nonzero},
			                {"unexpected", unexpected}});
		else
			fmt::print(out, "{:>3} {:>11} {:>10} {:>12} {:>15} {:>9} {:>10}\n",
			           n, row.assignments, row.evaluations, row.parity_zeros,
			           row.structural_zeros, row.nonzero, unexpected);
		for (auto const &s : row.unexpected_zeros)
			fmt::print(err, "n={}: unexpected zero at {}\n", n, s.str());
		for (auto const &s : row.structural_violations)
			fmt::print(err, "n={}: all-plus value nonzero at {}\n", n,
			           s.str());
	}
	if (options.json)
		out << rows.dump(2) << "\n";
	return clean ? kSuccess : kMismatch;
}

int run_bench(BenchOptions const &options, std::ostream &out,
              std::ostream &err)
{
	if (options.repeat < 1)
	{
		fmt::print(err, "error: --repeat must be at least 1\n");
		return kInvalidArguments;
	}
	if (options.n_min < 1 || options.n_max > SignAssignment::kMaxOrder)
	{
		fmt::print(err, "error: bench range must lie in 1..{}\n",
		           SignAssignment::kMaxOrder);
		return kInvalidArguments;
	}

	using clock = std::chrono::steady_clock;
	auto median_ms = [&](auto &&fn, std::size_t &terms) {
		std::vector<double> samples;
		for (int r = 0; r < options.repeat; ++r)
		{
			auto start = clock::now();
			terms = fn();
			samples.push_back(
			    std::chrono::duration<double, std::milli>(clock::now() - start)
			        .count());
		}
		std::sort(samples.begin(), samples.end());
		return samples[samples.size() / 2];
	};

	bool consistent = true;
	nlohmann::json rows = nlohmann::json::array();
	if (!options.json)
		fmt::print(out, "{:>3} {:>14} {:>12} {:>14} {:>12}\n", "n",
		           "symbolic_ms", "symbolic_n", "signed_ms", "signed_n");
	for (int n = options.n_min; n <= options.n_max; ++n)
	{
		std::size_t symbolic_terms = 0, signed_terms = 0;
		double symbolic = median_ms(
		    [n] {
			    clear_term_cache();
			    return bch_term(n).size();
		    },
		    symbolic_terms);
		double signed_path = median_ms(
		    [&] {
			    auto table = build_table(n, Pruning::symmetry, options.workers);
			    return reconstruct_term(n, table).size();
		    },
		    signed_terms);
		consistent = consistent && symbolic_terms == signed_terms;
		if (options.json)
			rows.push_back({{"n", n},
			                {"symbolic_ms", symbolic},
			                {"symbolic_terms", symbolic_terms},
			                {"signed_ms", signed_path},
			                {"signed_terms", signed_terms}});
		else
			fmt::print(out, "{:>3} {:>14.3f} {:>12} {:>14.3f} {:>12}\n", n,
			           symbolic, symbolic_terms, signed_path, signed_terms);
	}
	if (options.json)
		out << rows.dump(2) << "\n";
	if (!consistent)
	{
		fmt::print(err, "error: pipelines disagree on term counts\n");
		return kMismatch;
	}
	return kSuccess;
}

} // namespace bch::cli
