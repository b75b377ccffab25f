#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "grassmann/ring_maps.hpp"

namespace grassmann {

/// A cache file exists but is unreadable, malformed or fails its checksum.
class CacheIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kCacheSchema = "grassmann.ring_cache/1";
inline constexpr const char* kCacheDirEnv = "GRASSMANN_CACHE_DIR";

/// Lowercase hex SHA-256 of the bytes of s.
std::string sha256_hex(const std::string& s);

/// Ring tables memoized in memory and, when a directory is given, on disk as
/// checksummed JSON. Files are written to a temporary name and renamed into
/// place. Safe to share between threads.
class RingCache {
 public:
  explicit RingCache(std::optional<std::filesystem::path> dir = std::nullopt);

  /// Directory named by GRASSMANN_CACHE_DIR, if set and non-empty.
  static std::optional<std::filesystem::path> dir_from_env();

  RingPtr get(const RingSpec& spec);
  RingProvider provider();

  std::filesystem::path file_for(const RingSpec& spec) const;
  const std::optional<std::filesystem::path>& dir() const { return dir_; }

  struct Stats {
    std::size_t memory_hits = 0;
    std::size_t disk_hits = 0;
    std::size_t builds = 0;
  };
  Stats stats() const;

 private:
  RingPtr load(const std::filesystem::path& file, const RingSpec& spec) const;
  void store(const std::filesystem::path& file, const RingTable& ring) const;

  std::optional<std::filesystem::path> dir_;
  mutable std::mutex mutex_;
  std::map<std::pair<int, int>, RingPtr> memo_;
  Stats stats_;
};

}  // namespace grassmann
