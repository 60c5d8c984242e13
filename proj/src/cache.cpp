#include "liespec/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "liespec/csv.hpp"

namespace liespec {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Cache Cache::from_env(const std::string& fallback_dir) {
  const char* env = std::getenv("LIESPEC_CACHE_DIR");
  if (env && *env) return Cache(env);
  return Cache(fallback_dir);
}

namespace {
std::string hex64(std::uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}
}  // namespace

std::string Cache::entry_path(const std::string& module, const nlohmann::json& params,
                              int version) const {
  nlohmann::json key{{"module", module}, {"params", params}, {"version", version}};
  return dir_ + "/" + module + "-" + hex64(fnv1a64(key.dump())) + ".json";
}

std::optional<nlohmann::json> Cache::load(const std::string& module, const nlohmann::json& params,
                                          int version) const {
  if (!enabled()) return std::nullopt;
  std::string path = entry_path(module, params, version);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  nlohmann::json doc;
  try {
    in >> doc;
    if (doc.at("module") != module || doc.at("params") != params ||
        doc.at("version").get<int>() != version) {
      std::cerr << "liespec: cache key mismatch in " << path << ", recomputing\n";
      return std::nullopt;
    }
    std::string payload_text = doc.at("payload").dump();
    if (doc.at("checksum").get<std::string>() != hex64(fnv1a64(payload_text))) {
      std::cerr << "liespec: corrupted cache entry " << path << ", recomputing\n";
      return std::nullopt;
    }
    return doc.at("payload");
  } catch (const std::exception& e) {
    std::cerr << "liespec: unreadable cache entry " << path << " (" << e.what()
              << "), recomputing\n";
    return std::nullopt;
  }
}

void Cache::store(const std::string& module, const nlohmann::json& params,
                  const nlohmann::json& payload, int version) const {
  if (!enabled()) return;
  nlohmann::json doc{{"module", module},
                     {"params", params},
                     {"version", version},
                     {"checksum", hex64(fnv1a64(payload.dump()))},
                     {"payload", payload}};
  write_file_atomic(entry_path(module, params, version), doc.dump(2) + "\n");
}

}  // namespace liespec
