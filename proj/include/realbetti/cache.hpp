#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "realbetti/series.hpp"

namespace realbetti::cache {

inline constexpr int kFormatVersion = 1;

// Canonical key "g{g}a{a}r{r}d{d}N{N}v{version}"; d is the normalized residue.
std::string cache_key(int g, int a, int r, long long d, int order);

// One JSON file per key under dir. Loads return nullopt on any miss or
// unreadable/ill-formed file (a cache must never turn into a failure source).
std::optional<series::TruncatedSeries> load(const std::filesystem::path& dir,
                                            const std::string& key);
void store(const std::filesystem::path& dir, const std::string& key,
           const series::TruncatedSeries& s);

struct Stats {
    std::uintmax_t files = 0;
    std::uintmax_t bytes = 0;
};

Stats stats(const std::filesystem::path& dir);

// Removes this artifact's cache files (key-pattern *.json only); returns count.
std::uintmax_t clear(const std::filesystem::path& dir);

// --cache-dir flag beats REALBETTI_CACHE_DIR; nullopt when neither is set.
std::optional<std::filesystem::path> resolve_dir(const std::optional<std::string>& flag_value);

}  // namespace realbetti::cache
