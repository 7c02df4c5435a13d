#include "bch/cli/document.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

namespace bch::cli {

using nlohmann::json;

Format parse_format(std::string_view name)
{
	if (name == "text")
		return Format::text;
	if (name == "json")
		return Format::json;
	if (name == "latex")
		return Format::latex;
	throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

OutputDocument make_document(NCSeries const &z,
                             std::vector<std::string> series_fingerprints,
                             std::vector<LieTerm> const *dynkin)
{
	OutputDocument doc;
	auto &meta = doc.metadata;
	meta.order = z.max_degree();
	meta.factors = z.alphabet().size();
	meta.letters = z.alphabet().letters();
	bool const all_exp =
	    std::all_of(series_fingerprints.begin(), series_fingerprints.end(),
	                [](auto const &f) { return f == "exp"; });
	meta.mode = !all_exp ? "logf" : meta.factors == 2 ? "bch" : "multi";
	meta.series = std::move(series_fingerprints);

	for (auto const &[w, c] : z.terms())
		doc.terms.push_back(
		    {w.str(z.alphabet()), c.numerator(), c.denominator()});
	if (dynkin)
	{
		doc.dynkin.emplace();
		for (auto const &t : *dynkin)
			doc.dynkin->push_back({t.word.str(z.alphabet()),
			                       t.coefficient.numerator(),
			                       t.coefficient.denominator()});
	}
	return doc;
}

NCSeries document_series(OutputDocument const &doc)
{
	Alphabet alphabet(doc.metadata.letters);
	NCSeries s(alphabet, doc.metadata.order);
	for (auto const &e : doc.terms)
		s.add(Word::parse(e.word, alphabet),
		      Rational::from_strings(e.numerator, e.denominator));
	return s;
}

std::string bracket_string(std::string_view word, Alphabet const &alphabet)
{
	Word w = Word::parse(word, alphabet);
	if (w.length() == 0)
		throw std::invalid_argument("empty commutator word");
	std::string s = alphabet.name(w.letters[0]);
	for (std::size_t i = 1; i < w.length(); ++i)
		s = "[" + s + "," + alphabet.name(w.letters[i]) + "]";
	return s;
}

namespace {

json entries_to_json(std::vector<CoefficientEntry> const &entries)
{
	json arr = json::array();
	for (auto const &e : entries)
		arr.push_back({{"word", e.word},
		               {"numerator", e.numerator},
		               {"denominator", e.denominator}});
	return arr;
}

std::vector<CoefficientEntry> entries_from_json(json const &arr)
{
	std::vector<CoefficientEntry> out;
	for (auto const &e : arr)
	{
		CoefficientEntry entry{e.at("word").get<std::string>(),
		                       e.at("numerator").get<std::string>(),
		                       e.at("denominator").get<std::string>()};
		// validates the integer text and lowest terms
		Rational r;
		try
		{
			r = Rational::from_strings(entry.numerator, entry.denominator);
		}
		catch (DivisionByZero const &)
		{
			throw std::invalid_argument("zero denominator");
		}
		if (r.numerator() != entry.numerator ||
		    r.denominator() != entry.denominator)
			throw std::invalid_argument("coefficient not in lowest terms");
		out.push_back(std::move(entry));
	}
	return out;
}

std::string coefficient_text(CoefficientEntry const &e)
{
	return e.denominator == "1" ? e.numerator
	                            : e.numerator + "/" + e.denominator;
}

} // namespace

std::string to_json(OutputDocument const &doc)
{
	auto const &m = doc.metadata;
	json j;
	j["metadata"] = {{"order", m.order},
	                 {"mode", m.mode},
	                 {"factors", m.factors},
	                 {"letters", m.letters},
	                 {"series", m.series},
	                 {"tool_version", m.tool_version}};
	j["terms"] = entries_to_json(doc.terms);
	if (doc.dynkin)
		j["dynkin"] = entries_to_json(*doc.dynkin);
	return j.dump(2) + "\n";
}

OutputDocument parse_json(std::string_view text)
{
	try
	{
		json j = json::parse(text);
		OutputDocument doc;
		auto const &m = j.at("metadata");
		doc.metadata.order = m.at("order").get<int>();
		doc.metadata.mode = m.at("mode").get<std::string>();
		doc.metadata.factors = m.at("factors").get<int>();
		doc.metadata.letters =
		    m.at("letters").get<std::vector<std::string>>();
		doc.metadata.series = m.at("series").get<std::vector<std::string>>();
		doc.metadata.tool_version = m.at("tool_version").get<std::string>();
		doc.terms = entries_from_json(j.at("terms"));
		if (j.contains("dynkin"))
			doc.dynkin = entries_from_json(j.at("dynkin"));
		return doc;
	}
	catch (json::exception const &e)
	{
		throw std::invalid_argument(std::string("malformed document: ") +
		                            e.what());
	}
}

std::string to_text(OutputDocument const &doc)
{
	std::string out;
	for (auto const &e : doc.terms)
		out += fmt::format("{}  {}\n", coefficient_text(e), e.word);
	if (doc.dynkin)
	{
		Alphabet alphabet(doc.metadata.letters);
		out += "# dynkin\n";
		for (auto const &e : *doc.dynkin)
			out += fmt::format("{}  {}\n", coefficient_text(e),
			                   bracket_string(e.word, alphabet));
	}
	return out;
}

namespace {

std::string latex_sum(std::vector<CoefficientEntry> const &entries,
                      auto &&body)
{
	if (entries.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto const &e : entries)
	{
		bool const negative = e.numerator.front() == '-';
		std::string magnitude =
		    negative ? e.numerator.substr(1) : e.numerator;
		if (first)
			out += negative ? "-" : "";
		else
			out += negative ? " - " : " + ";
		first = false;
		if (e.denominator != "1")
			out += fmt::format("\\frac{{{}}}{{{}}}\\,", magnitude,
			                   e.denominator);
		else if (magnitude != "1")
			out += magnitude + "\\,";
		out += body(e.word);
	}
	return out;
}

} // namespace

std::string to_latex(OutputDocument const &doc)
{
	auto plain = [](std::string const &w) { return w; };
	std::string out = fmt::format("z_{{{}}} = {}\n", doc.metadata.order,
	                              latex_sum(doc.terms, plain));
	if (doc.dynkin)
	{
		Alphabet alphabet(doc.metadata.letters);
		auto bracket = [&](std::string const &w) {
			return bracket_string(w, alphabet);
		};
		out += fmt::format("z_{{{}}} = {}\n", doc.metadata.order,
		                   latex_sum(*doc.dynkin, bracket));
	}
	return out;
}

std::string render(OutputDocument const &doc, Format format)
{
	switch (format)
	{
	case Format::text:
		return to_text(doc);
	case Format::json:
		return to_json(doc);
	case Format::latex:
		return to_latex(doc);
	}
	throw std::logic_error("unhandled format");
}

} // namespace bch::cli
