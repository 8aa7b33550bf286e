#pragma once

#include <atomic>
#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "qhull/config.hpp"
#include "qhull/module.hpp"

namespace qhull {

/// Content hash of a module: ring tables, additive structure, action, label.
std::string module_fingerprint(const RightModule& m);
/// Cache key: fingerprint, operation name and the caps that can change the outcome.
std::string cache_key(const RightModule& m, const std::string& op, const Config& config);

/// Thread-safe memo of derived structures. Concurrent reads, serialized
/// writes. With a directory set, text payloads also persist across runs.
class HullCache {
 public:
  explicit HullCache(std::optional<std::filesystem::path> dir = std::nullopt);
  /// Cache backed by $QHULL_CACHE, or nullptr when the variable is unset.
  static std::shared_ptr<HullCache> from_environment();

  template <typename T>
  std::shared_ptr<const T> get(const std::string& key) const {
    return std::static_pointer_cast<const T>(find(key));
  }
  template <typename T>
  void put(const std::string& key, std::shared_ptr<const T> value) {
    store(key, std::static_pointer_cast<const void>(std::move(value)));
  }

  std::optional<std::string> load_text(const std::string& key) const;
  void save_text(const std::string& key, const std::string& text) const;

  std::uint64_t hits() const { return hits_; }
  std::uint64_t misses() const { return misses_; }

 private:
  std::shared_ptr<const void> find(const std::string& key) const;
  void store(const std::string& key, std::shared_ptr<const void> value);

  std::optional<std::filesystem::path> dir_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const void>> entries_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

}  // namespace qhull
