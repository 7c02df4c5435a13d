#include "bch/cli/cache.hpp"

#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <openssl/evp.h>

namespace bch::cli {

namespace fs = std::filesystem;

DocumentCache::DocumentCache(fs::path directory)
    : directory_(std::move(directory))
{}

std::optional<fs::path> DocumentCache::default_directory()
{
	if (char const *dir = std::getenv(kCacheDirVariable); dir && *dir)
		return fs::path(dir);
	if (char const *xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
		return fs::path(xdg) / "bchterm";
	if (char const *home = std::getenv("HOME"); home && *home)
		return fs::path(home) / ".cache" / "bchterm";
	return std::nullopt;
}

std::string DocumentCache::key(Request const &r)
{
	std::string text =
	    fmt::format("mode={}\norder={}\nfactors={}\nseries={}\nletters={}\n"
	                "dynkin={}\nversion={}\n",
	                r.mode, r.order, r.factors, fmt::join(r.series, ";"),
	                fmt::join(r.letters, ","), r.dynkin, kToolVersion);

	std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
	unsigned int length = 0;
	if (!EVP_Digest(text.data(), text.size(), digest.data(), &length,
	                EVP_sha256(), nullptr))
		throw std::runtime_error("SHA-256 digest failed");
	std::string hex;
	for (unsigned i = 0; i < length; ++i)
		hex += fmt::format("{:02x}", digest[i]);
	return hex;
}

fs::path DocumentCache::path_for(std::string const &key) const
{
	return directory_ / (key + ".json");
}

std::optional<OutputDocument> DocumentCache::load(std::string const &key) const
{
	std::ifstream in(path_for(key), std::ios::binary);
	if (!in)
		return std::nullopt;
	std::stringstream buffer;
	buffer << in.rdbuf();
	try
	{
		return parse_json(buffer.str());
	}
	catch (std::exception const &)
	{
		return std::nullopt;
	}
}

void DocumentCache::store(std::string const &key,
                          OutputDocument const &doc) const
{
	fs::create_directories(directory_);
	auto target = path_for(key);
	auto temp = target;
	temp += ".tmp";
	{
		std::ofstream out(temp, std::ios::binary | std::ios::trunc);
		out << to_json(doc);
		if (!out)
			throw std::runtime_error("cannot write cache entry " +
			                         temp.string());
	}
	fs::rename(temp, target);
}

} // namespace bch::cli
