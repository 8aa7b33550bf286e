#pragma once

#include <cstdint>
#include <memory>

namespace qhull {

class HullCache;

/// Size caps and cross-check switches shared by every operation.
struct Config {
  /// Largest module the injective-hull climb may enumerate.
  std::uint64_t max_module_order = 4096;
  /// Largest hom group that may be materialized as a list of maps.
  std::uint64_t max_hom_maps = std::uint64_t{1} << 20;
  /// Below this many candidate maps the exhaustive hom oracle is allowed.
  std::uint64_t exhaustive_hom_cap = std::uint64_t{1} << 16;
  /// Largest submodule lattice a walk may produce.
  std::uint64_t max_lattice = 4096;
  /// Largest endomorphism ring materialized with a multiplication table.
  std::uint64_t max_end_ring = 1024;
  /// Evaluate every equivalent criterion and fail on disagreement.
  bool debug_crosscheck = false;
};

/// Config plus the optional shared hull cache. Cheap to copy.
struct Context {
  Config config{};
  std::shared_ptr<HullCache> cache{};

  Context with_debug(bool on) const {
    Context copy = *this;
    copy.config.debug_crosscheck = on;
    return copy;
  }
};

}  // namespace qhull
