#pragma once

#include <cstdint>
#include <vector>

#include "qhull/module.hpp"

namespace qhull {

/// A submodule, stored as its sorted member list plus a membership mask.
class Submodule {
 public:
  /// Trusted: members sorted, closed, containing 0.
  Submodule(ModulePtr ambient, std::vector<Elem> members);

  const ModulePtr& ambient() const { return ambient_; }
  const std::vector<Elem>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem e) const { return mask_[e] != 0; }
  bool is_zero() const { return members_.size() == 1; }
  bool is_whole() const { return members_.size() == ambient_->order(); }
  bool subset_of(const Submodule& other) const;

  bool operator==(const Submodule& other) const { return members_ == other.members_; }

 private:
  ModulePtr ambient_;
  std::vector<Elem> members_;
  std::vector<std::uint8_t> mask_;
};

/// A right ideal is a submodule of R_R.
using RightIdeal = Submodule;

/// Validates closure; throws NotASubmodule naming the failing element.
Submodule make_submodule(const ModulePtr& m, std::vector<Elem> members);
Submodule zero_submodule(const ModulePtr& m);
Submodule whole_submodule(const ModulePtr& m);
/// xR = {x·r}
Submodule cyclic_submodule(const ModulePtr& m, Elem x);
Submodule submodule_generated(const ModulePtr& m, const std::vector<Elem>& gens);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
Submodule submodule_intersection(const Submodule& a, const Submodule& b);
void require_submodule_of(const Submodule& n, const RightModule& m);

/// Every submodule exactly once, ordered by size then members.
/// Throws CapExceeded beyond `cap` submodules.
std::vector<Submodule> enumerate_submodules(const ModulePtr& m, std::uint64_t cap);
/// Submodules P with lower ≤ P ≤ upper.
std::vector<Submodule> enumerate_between(const Submodule& lower, const Submodule& upper, std::uint64_t cap);
std::vector<RightIdeal> enumerate_right_ideals(const RingPtr& ring, std::uint64_t cap);

/// Sum of the simple submodules.
Submodule socle(const ModulePtr& m);

struct SubmoduleModule {
  ModulePtr module;
  ModuleHom inclusion;  // module → ambient
};
SubmoduleModule submodule_as_module(const Submodule& n, std::string label = "N");

struct QuotientModule {
  ModulePtr module;
  ModuleHom projection;  // M → M/N
};
QuotientModule quotient_module(const ModulePtr& m, const Submodule& n, std::string label = "M/N");

struct DirectSum {
  ModulePtr module;
  std::vector<ModuleHom> injections;
  std::vector<ModuleHom> projections;
};
/// Component tuples (m_1,…,m_k) are mapped to canonical indices of the sum.
DirectSum direct_sum(const std::vector<ModulePtr>& parts, std::string label = "");

Submodule image(const ModuleHom& f);
Submodule kernel(const ModuleHom& f);
/// f(N) for a submodule N of f's source.
Submodule image_of(const ModuleHom& f, const Submodule& n);
/// {m : f(m) ∈ K}
Submodule preimage(const ModuleHom& f, const Submodule& k);

/// x⁻¹K = {r ∈ R : x·r ∈ K}.
RightIdeal preimage_ideal(Elem x, const Submodule& k);
/// r_R(m) = {r : m·r = 0}.
RightIdeal element_annihilator(const ModulePtr& m, Elem x);
/// {m ∈ M : m·I = 0} for a right ideal I.
Submodule module_annihilator(const ModulePtr& m, const RightIdeal& ideal);
/// l_H(N): the maps in `homs` vanishing on N.
std::vector<ModuleHom> hom_annihilator(const std::vector<ModuleHom>& homs, const Submodule& n);
/// r_M(I) = {m : φ(m) = 0 for every φ in I}.
Submodule common_kernel(const ModulePtr& m, const std::vector<ModuleHom>& homs);

/// Minimal generating set of a submodule, greedy in canonical order.
std::vector<Elem> submodule_generators(const Submodule& n);

bool is_two_sided(const RightIdeal& ideal);

}  // namespace qhull
