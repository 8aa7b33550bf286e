#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qhull/config.hpp"
#include "qhull/module.hpp"

namespace qhull {

/// Hom_R(M, N) as a finite abelian group with an independent cyclic basis.
/// Maps are addressed by mixed-radix index over the basis (last basis
/// element least significant); index 0 is the zero map.
class HomSpace {
 public:
  /// basis[i][k] is the image of the k-th additive generator of M under
  /// the i-th basis map.
  HomSpace(ModulePtr source, ModulePtr target, std::vector<std::vector<Elem>> basis,
           std::vector<std::uint64_t> orders);

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  /// |Hom(M, N)|, saturating at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  std::size_t basis_size() const { return orders_.size(); }
  std::uint64_t basis_order(std::size_t i) const { return orders_[i]; }
  const std::vector<Elem>& basis_images(std::size_t i) const { return basis_[i]; }

  std::vector<Elem> generator_images(std::uint64_t index) const;
  ModuleHom at(std::uint64_t index) const;
  ModuleHom basis_hom(std::size_t i) const;
  /// Every map in index order. Throws CapExceeded when size() > cap.
  std::vector<ModuleHom> all(std::uint64_t cap) const;

 private:
  ModulePtr source_;
  ModulePtr target_;
  std::vector<std::vector<Elem>> basis_;
  std::vector<std::uint64_t> orders_;
  std::uint64_t size_ = 1;
};

/// Solves the linearity conditions on additive generators, prime by prime,
/// as a kernel computation over Z/p^e.
HomSpace hom_group(const ModulePtr& m, const ModulePtr& n);

/// hom_group(m, n).all(ctx.config.max_hom_maps).
std::vector<ModuleHom> hom_space(const ModulePtr& m, const ModulePtr& n, const Context& ctx = {});

/// Saturating |Hom(M, N)| without materializing maps.
std::uint64_t hom_count(const ModulePtr& m, const ModulePtr& n);

/// The map determined by images of M's additive generators (trusted).
ModuleHom hom_from_generator_images(const ModulePtr& m, const ModulePtr& n, const std::vector<Elem>& images);
/// Images of M's additive generators.
std::vector<Elem> generator_images(const ModuleHom& f);

/// Oracle: tries every function M → N. Throws CapExceeded when |N|^|M| > cap.
std::vector<ModuleHom> hom_space_all_functions(const ModulePtr& m, const ModulePtr& n, std::uint64_t cap);
/// Oracle: tries every assignment of images to additive generators and keeps
/// the R-linear ones. Throws CapExceeded when |N|^rank(M) > cap.
std::vector<ModuleHom> hom_space_generator_search(const ModulePtr& m, const ModulePtr& n, std::uint64_t cap);

struct VectorHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept;
};

/// End_R(M) as a finite ring; homs[i] is the map behind ring element i.
struct EndRing {
  ModulePtr base;
  RingPtr ring;
  std::vector<ModuleHom> homs;
  std::unordered_map<std::vector<Elem>, Elem, VectorHash> lookup;  // generator images -> index

  Elem index_of(const ModuleHom& f) const;
};

/// Throws CapExceeded when |End(M)| > ctx.config.max_end_ring.
EndRing end_ring(const ModulePtr& m, const Context& ctx = {});

}  // namespace qhull
