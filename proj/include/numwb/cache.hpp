#pragma once
// On-disk tables of S, Z and S_p values.
//
// File layout: a text header of "key value" lines,
//   numwb-cache
//   version 1
//   function S
//   range 1 1000
//   records 1000
//   end
// followed by `records` fixed-width records, each two little-endian uint64:
// the index, then the value. A header that does not parse, names another
// version or disagrees with the record count makes the file unusable; callers
// recompute instead.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace numwb {

inline constexpr const char* kCacheMagic = "numwb-cache";
inline constexpr unsigned kCacheVersion = 1;
inline constexpr const char* kCacheDirEnv = "NUMWB_CACHE_DIR";

struct CacheHeader {
    unsigned version = kCacheVersion;
    std::string function;  // "S", "Z" or "S_p:<p>" (indexed by k)
    std::uint64_t lo = 0, hi = 0;
    std::uint64_t records = 0;
};

struct CacheContents {
    CacheHeader header;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> records;
};

bool is_cacheable(const std::string& function_id);
// Throws std::invalid_argument for an id that is not cacheable.
std::uint64_t cacheable_value(const std::string& function_id, std::uint64_t n);

// $NUMWB_CACHE_DIR, else ./.numwb-cache
std::filesystem::path cache_directory();
std::filesystem::path cache_file(const std::filesystem::path& dir, const std::string& function_id);

CacheHeader build_cache(const std::filesystem::path& dir, const std::string& function_id, std::uint64_t lo,
                        std::uint64_t hi, unsigned workers = 0);
// nullopt when the file is missing or corrupt.
std::optional<CacheContents> load_cache(const std::filesystem::path& file);
std::optional<CacheHeader> read_cache_header(const std::filesystem::path& file);
bool clear_cache(const std::filesystem::path& dir, const std::string& function_id);

struct CachedValues {
    std::vector<std::uint64_t> values;  // for lo..hi
    bool from_cache = false;
};
// Reads the cached table when it covers [lo, hi], recomputes otherwise.
CachedValues cached_values(const std::filesystem::path& dir, const std::string& function_id, std::uint64_t lo,
                           std::uint64_t hi);

// Loads a cached S table into the in-memory memo. Returns the number of values
// loaded (0 when there is no usable file).
std::size_t warm_S_from_cache(const std::filesystem::path& dir);

}  // namespace numwb
