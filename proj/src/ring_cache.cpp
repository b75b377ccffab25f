#include "grassmann/ring_cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <openssl/evp.h>

namespace grassmann {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& s) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(s.data(), s.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256: digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

RingCache::RingCache(std::optional<fs::path> dir) : dir_(std::move(dir)) {}

std::optional<fs::path> RingCache::dir_from_env() {
  const char* v = std::getenv(kCacheDirEnv);
  if (!v || !*v) return std::nullopt;
  return fs::path(v);
}

fs::path RingCache::file_for(const RingSpec& spec) const {
  if (!dir_) throw std::logic_error("ring cache: no directory configured");
  return *dir_ / ("ring-" + std::to_string(spec.n) + "-" + std::to_string(spec.k) + ".v1.json");
}

RingCache::Stats RingCache::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

RingPtr RingCache::get(const RingSpec& spec) {
  const auto key = std::make_pair(spec.n, spec.k);
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
      ++stats_.memory_hits;
      return it->second;
    }
  }
  RingPtr ring;
  bool from_disk = false;
  if (dir_ && fs::exists(file_for(spec))) {
    ring = load(file_for(spec), spec);
    from_disk = true;
  } else {
    ring = build_ring(spec);
    if (dir_) store(file_for(spec), *ring);
  }
  std::lock_guard lock(mutex_);
  from_disk ? ++stats_.disk_hits : ++stats_.builds;
  return memo_.emplace(key, ring).first->second;
}

RingProvider RingCache::provider() {
  return [this](const RingSpec& spec) { return get(spec); };
}

RingPtr RingCache::load(const fs::path& file, const RingSpec& spec) const {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw CacheIntegrityError("cache: cannot read " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  Json doc;
  try {
    doc = Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw CacheIntegrityError("cache: " + file.string() + " is not valid JSON (" + e.what() + ")");
  }
  if (!doc.is_object() || doc.value("schema", std::string()) != kCacheSchema || !doc.contains("sha256") ||
      !doc.contains("table"))
    throw CacheIntegrityError("cache: " + file.string() + " has an unexpected layout");
  if (doc["sha256"] != sha256_hex(doc["table"].dump()))
    throw CacheIntegrityError("cache: checksum mismatch in " + file.string());
  try {
    RingPtr ring = ring_from_json(doc["table"]);
    if (!(ring->spec() == spec)) throw CacheIntegrityError("cache: " + file.string() + " holds a different ring");
    return ring;
  } catch (const FormatError& e) {
    throw CacheIntegrityError("cache: " + file.string() + ": " + e.what());
  }
}

void RingCache::store(const fs::path& file, const RingTable& ring) const {
  static std::atomic<unsigned> counter{0};
  Json table = ring_to_json(ring);
  Json doc;
  doc["schema"] = kCacheSchema;
  doc["sha256"] = sha256_hex(table.dump());
  doc["table"] = std::move(table);
  fs::create_directories(file.parent_path());
  const fs::path tmp = file.parent_path() / (file.filename().string() + ".tmp-" + std::to_string(::getpid()) + "-" +
                                             std::to_string(counter++));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cache: cannot write " + tmp.string());
    out << doc.dump() << '\n';
    if (!out.flush()) throw std::runtime_error("cache: write failed for " + tmp.string());
  }
  fs::rename(tmp, file);
}

}  // namespace grassmann
