#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bch/dynkin.hpp"
#include "bch/words.hpp"

namespace bch::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct DocumentMetadata
{
	int order = 0;
	std::string mode; // "bch", "multi" or "logf"
	int factors = 2;
	std::vector<std::string> letters;
	std::vector<std::string> series; // per-factor fingerprints
	std::string tool_version{kToolVersion};

	friend bool operator==(DocumentMetadata const &,
	                       DocumentMetadata const &) = default;
};

/// One (word, coefficient) pair. Coefficients travel as separate integer
/// strings so any precision survives.
struct CoefficientEntry
{
	std::string word;
	std::string numerator;
	std::string denominator;

	friend bool operator==(CoefficientEntry const &,
	                       CoefficientEntry const &) = default;
};

struct OutputDocument
{
	DocumentMetadata metadata;
	std::vector<CoefficientEntry> terms;
	/// Words of the left-normed commutators, when requested.
	std::optional<std::vector<CoefficientEntry>> dynkin;

	friend bool operator==(OutputDocument const &,
	                       OutputDocument const &) = default;
};

enum class Format
{
	text,
	json,
	latex
};

Format parse_format(std::string_view name);

/// Series fingerprints determine the mode: all "exp" with two factors is
/// "bch", all "exp" otherwise is "multi", anything else is "logf".
OutputDocument make_document(NCSeries const &z,
                             std::vector<std::string> series_fingerprints,
                             std::vector<LieTerm> const *dynkin = nullptr);

/// The terms payload as a series over the document's letters.
NCSeries document_series(OutputDocument const &doc);

/// Left-normed bracket text, e.g. "[[x,y],x]".
std::string bracket_string(std::string_view word, Alphabet const &alphabet);

std::string to_json(OutputDocument const &doc);
/// Throws std::invalid_argument on malformed input.
OutputDocument parse_json(std::string_view text);
std::string to_text(OutputDocument const &doc);
std::string to_latex(OutputDocument const &doc);
std::string render(OutputDocument const &doc, Format format);

} // namespace bch::cli
