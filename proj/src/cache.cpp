#include "qhull/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

namespace qhull {

namespace {

struct Fnv {
  std::uint64_t h = 1469598103934665603ULL;
  void mix(std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  }
  void mix(const std::string& s) {
    mix(s.size());
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  }
};

}  // namespace

std::string module_fingerprint(const RightModule& m) {
  Fnv f;
  const auto& r = *m.ring();
  f.mix(r.order());
  for (auto q : r.invariant_factors()) f.mix(q);
  for (auto x : r.mul_table()) f.mix(x);
  f.mix(r.one());
  f.mix(m.order());
  for (auto q : m.invariant_factors()) f.mix(q);
  for (auto x : m.act_table()) f.mix(x);
  f.mix(m.label());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(f.h));
  return buf;
}

std::string cache_key(const RightModule& m, const std::string& op, const Config& c) {
  std::ostringstream out;
  out << module_fingerprint(m) << '-' << op << '-' << c.max_module_order << '.' << c.max_hom_maps << '.'
      << c.max_lattice << '.' << c.max_end_ring;
  return out.str();
}

HullCache::HullCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
  if (dir_) std::filesystem::create_directories(*dir_);
}

std::shared_ptr<HullCache> HullCache::from_environment() {
  const char* dir = std::getenv("QHULL_CACHE");
  if (dir == nullptr || *dir == '\0') return nullptr;
  return std::make_shared<HullCache>(std::filesystem::path(dir));
}

std::shared_ptr<const void> HullCache::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    ++misses_;
    return nullptr;
  }
  ++hits_;
  return it->second;
}

void HullCache::store(const std::string& key, std::shared_ptr<const void> value) {
  std::unique_lock lock(mutex_);
  entries_.emplace(key, std::move(value));
}

std::optional<std::string> HullCache::load_text(const std::string& key) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(*dir_ / (key + ".txt"));
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void HullCache::save_text(const std::string& key, const std::string& text) const {
  if (!dir_) return;
  const auto final_path = *dir_ / (key + ".txt");
  std::unique_lock lock(mutex_);
  const auto tmp = *dir_ / (key + ".tmp");
  {
    std::ofstream out(tmp);
    out << text;
  }
  std::filesystem::rename(tmp, final_path);
}

}  // namespace qhull
