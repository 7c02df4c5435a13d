// bchterm: exact terms of the Baker-Campbell-Hausdorff series and its
// generalizations, plus the cross-checks and lattice scans behind them.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bch/cli/commands.hpp"

using namespace bch::cli;

int main(int argc, char **argv)
{
	CLI::App app{"Exact Baker-Campbell-Hausdorff series terms"};
	app.require_subcommand(1);
	app.set_version_flag("--version", std::string(kToolVersion));

	TermOptions term;
	std::string format = "text";
	std::string out_path;
	std::string letters;
	bool no_cache = false;
	auto *term_cmd =
	    app.add_subcommand("term", "Order-n term of log(f(a0) f(a1) ...)");
	term_cmd->add_option("n", term.order, "Order of the term")->required();
	term_cmd->add_option("--factors,-m", term.factors, "Number of factors")
	    ->capture_default_str();
	term_cmd->add_option("--letters", letters,
	                     "Comma-separated letter names (default x,y,w,a,...)");
	term_cmd->add_option("--series", term.series,
	                     "Series per factor: 'exp' or coefficients c0,c1,... "
	                     "with c0 = 1; repeat once per factor or give once "
	                     "for all");
	term_cmd->add_flag("--dynkin", term.dynkin,
	                   "Also emit the left-normed commutator form");
	term_cmd->add_option("--format", format, "text, json or latex")
	    ->check(CLI::IsMember({"text", "json", "latex"}))
	    ->capture_default_str();
	term_cmd->add_option("--out,-o", out_path, "Write to a file");
	term_cmd->add_flag("--no-cache", no_cache,
	                   "Disable the on-disk result cache");

	VerifyOptions verify;
	std::string modes;
	auto *verify_cmd = app.add_subcommand(
	    "verify", "Cross-check the matrix pipeline against independent routes");
	verify_cmd->add_option("n_max", verify.n_max, "Highest order checked")
	    ->required();
	verify_cmd->add_option(
	    "--modes", modes,
	    "Comma-separated subset of oracle,multi,logf,signed,dynkin,symmetry");
	verify_cmd->add_option("--workers", verify.workers,
	                       "Threads for lattice work (0 = all cores)");

	ScanOptions scan;
	auto *scan_cmd = app.add_subcommand(
	    "scan", "Look for vanishing signed coefficients beyond the symmetric "
	            "ones");
	scan_cmd->add_option("n_max", scan.n_max, "Highest order scanned")
	    ->required();
	scan_cmd->add_option("--workers", scan.workers,
	                     "Threads for lattice work (0 = all cores)");
	scan_cmd->add_flag("--json", scan.json, "Machine-readable output");

	BenchOptions bench;
	auto *bench_cmd = app.add_subcommand(
	    "bench", "Time the symbolic-matrix and signed-evaluation pipelines");
	bench_cmd->add_option("n_min", bench.n_min, "First order")
	    ->capture_default_str();
	bench_cmd->add_option("n_max", bench.n_max, "Last order")
	    ->capture_default_str();
	bench_cmd->add_option("--repeat", bench.repeat,
	                      "Repetitions; the median is reported")
	    ->capture_default_str();
	bench_cmd->add_option("--workers", bench.workers,
	                      "Threads for lattice work (0 = all cores)");
	bench_cmd->add_flag("--json", bench.json, "Machine-readable output");

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::Success const &e)
	{
		return app.exit(e);
	}
	catch (CLI::ParseError const &e)
	{
		app.exit(e);
		return kInvalidArguments;
	}

	auto split = [](std::string const &s) {
		std::vector<std::string> parts;
		if (s.empty())
			return parts;
		std::size_t start = 0;
		while (true)
		{
			auto comma = s.find(',', start);
			parts.push_back(s.substr(start, comma - start));
			if (comma == std::string::npos)
				break;
			start = comma + 1;
		}
		return parts;
	};

	if (*term_cmd)
	{
		term.format = parse_format(format);
		term.letters = split(letters);
		term.use_cache = !no_cache;
		if (!out_path.empty())
			term.out = out_path;
		return run_term(term, std::cout, std::cerr);
	}
	if (*verify_cmd)
	{
		verify.modes = split(modes);
		return run_verify(verify, std::cout, std::cerr);
	}
	if (*scan_cmd)
		return run_scan(scan, std::cout, std::cerr);
	return run_bench(bench, std::cout, std::cerr);
}
