#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "bch/cli/document.hpp"

namespace bch::cli {

/// Environment variable that overrides the cache directory.
inline constexpr char const *kCacheDirVariable = "BCH_CACHE_DIR";

/// Content-addressed store of serialized documents. Each file is named by
/// the SHA-256 of the request key and holds the JSON document.
class DocumentCache
{
  public:
	explicit DocumentCache(std::filesystem::path directory);

	/// $BCH_CACHE_DIR, else $XDG_CACHE_HOME/bchterm, else ~/.cache/bchterm.
	static std::optional<std::filesystem::path> default_directory();

	struct Request
	{
		std::string mode;
		int order = 0;
		int factors = 2;
		std::vector<std::string> series;
		std::vector<std::string> letters;
		bool dynkin = false;
	};
	static std::string key(Request const &request);

	std::filesystem::path const &directory() const { return directory_; }
	std::filesystem::path path_for(std::string const &key) const;

	/// Missing or unreadable entries yield nullopt.
	std::optional<OutputDocument> load(std::string const &key) const;
	/// Throws std::filesystem::filesystem_error or std::runtime_error.
	void store(std::string const &key, OutputDocument const &doc) const;

  private:
	std::filesystem::path directory_;
};

} // namespace bch::cli
