#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bch/cli/document.hpp"

namespace bch::cli {

enum ExitCode : int
{
	kSuccess = 0,
	kInvalidArguments = 1,
	kMismatch = 2,
	kIoFailure = 3
};

/// Largest order the free-algebra oracle is run at.
inline constexpr int kOracleLimit = 10;

struct TermOptions
{
	int order = 0;
	int factors = 2;
	/// Empty means the default names for the factor count.
	std::vector<std::string> letters;
	/// One spec per factor, or a single spec shared by all; empty = exp.
	std::vector<std::string> series;
	bool dynkin = false;
	Format format = Format::text;
	std::optional<std::filesystem::path> out;
	bool use_cache = true;
	/// Overrides DocumentCache::default_directory().
	std::optional<std::filesystem::path> cache_dir;
};

struct VerifyOptions
{
	int n_max = 0;
	/// Any of oracle, multi, logf, signed, dynkin, symmetry; empty = all.
	std::vector<std::string> modes;
	unsigned workers = 0;
};

struct ScanOptions
{
	int n_max = 0;
	unsigned workers = 0;
	bool json = false;
};

struct BenchOptions
{
	int n_min = 1;
	int n_max = 8;
	int repeat = 3;
	unsigned workers = 0;
	bool json = false;
};

/// Builds the document for a term request without touching the cache.
/// Throws std::invalid_argument for bad options.
OutputDocument compute_document(TermOptions const &options);

int run_term(TermOptions const &options, std::ostream &out,
             std::ostream &err);
int run_verify(VerifyOptions const &options, std::ostream &out,
               std::ostream &err);
int run_scan(ScanOptions const &options, std::ostream &out,
             std::ostream &err);
int run_bench(BenchOptions const &options, std::ostream &out,
              std::ostream &err);

} // namespace bch::cli
