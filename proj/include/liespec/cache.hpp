#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace liespec {

std::uint64_t fnv1a64(std::string_view s);

// Content-addressed JSON cache. Entries are keyed by (module, parameters,
// format version); payloads carry an embedded checksum and are recomputed,
// never trusted, when validation fails.
class Cache {
 public:
  static constexpr int kFormatVersion = 1;

  // Disabled cache (no directory): load misses, store is a no-op.
  Cache() = default;
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}

  // Directory from the environment override (LIESPEC_CACHE_DIR) or fallback;
  // empty fallback leaves the cache disabled.
  static Cache from_env(const std::string& fallback_dir = "");

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  std::string entry_path(const std::string& module, const nlohmann::json& params,
                         int version = kFormatVersion) const;

  // nullopt on miss, key mismatch, version mismatch or corruption (logged to
  // stderr as a warning).
  std::optional<nlohmann::json> load(const std::string& module, const nlohmann::json& params,
                                     int version = kFormatVersion) const;

  void store(const std::string& module, const nlohmann::json& params,
             const nlohmann::json& payload, int version = kFormatVersion) const;

 private:
  std::string dir_;
};

}  // namespace liespec
