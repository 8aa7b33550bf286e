#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "qhull/abelian.hpp"
#include "qhull/ring.hpp"

namespace qhull {

class RightModule;
using ModulePtr = std::shared_ptr<const RightModule>;

/// A finite unital right module over a FiniteRing. Immutable.
class RightModule {
 public:
  /// Trusted constructor; `act` is order × |R|, canonical indices.
  RightModule(RingPtr ring, AbelianGroup group, std::vector<Elem> act, std::string label);

  const RingPtr& ring() const { return ring_; }
  const AbelianGroup& group() const { return group_; }
  std::size_t order() const { return group_.order(); }
  std::span<const std::uint32_t> invariant_factors() const { return group_.factors(); }
  const std::string& label() const { return label_; }

  Elem add(Elem a, Elem b) const { return group_.add(a, b); }
  Elem neg(Elem a) const { return group_.neg(a); }
  Elem sub(Elem a, Elem b) const { return group_.sub(a, b); }
  Elem scale(std::int64_t k, Elem a) const { return group_.scale(k, a); }
  /// m·r
  Elem act(Elem m, Elem r) const { return act_[static_cast<std::size_t>(m) * ring_->order() + r]; }
  const std::vector<Elem>& act_table() const { return act_; }

  /// Copy carrying a different provenance label.
  ModulePtr relabeled(std::string label) const;

 private:
  RingPtr ring_;
  AbelianGroup group_;
  std::vector<Elem> act_;
  std::string label_;
};

/// Structural equality: same ring tables, group and action.
bool same_module(const RightModule& a, const RightModule& b);
void require_same_ring(const RightModule& a, const RightModule& b);

/// Validates an arbitrarily labeled module (label 0 = zero) and relabels it.
/// act_table rows are module labels, columns canonical ring indices.
struct ValidatedModule {
  ModulePtr module;
  std::vector<Elem> from_label;
};
ValidatedModule module_from_action_labeled(RingPtr ring, const std::vector<std::vector<Elem>>& add_table,
                                           const std::vector<std::vector<Elem>>& act_table, std::string label);
ModulePtr module_from_action(RingPtr ring, const std::vector<std::vector<Elem>>& add_table,
                             const std::vector<std::vector<Elem>>& act_table, std::string label = "M");

/// Exhaustive module axiom check on a canonical module.
void check_module_axioms(const RightModule& m);

/// R as a right module over itself.
ModulePtr regular_module(const RingPtr& ring);

/// A module built from caller labels 0..n-1 (0 = zero) with trusted
/// operations, together with the relabeling.
struct BuiltModule {
  ModulePtr module;
  std::vector<Elem> to_label;
  std::vector<Elem> from_label;
};
BuiltModule build_module(const RingPtr& ring, std::size_t n, const std::function<Elem(Elem, Elem)>& add,
                         const std::function<Elem(Elem, Elem)>& act, std::string label);

/// An R-linear map, stored as its full element table.
class ModuleHom {
 public:
  ModuleHom(ModulePtr source, ModulePtr target, std::vector<Elem> map);

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  Elem operator()(Elem m) const { return map_[m]; }
  const std::vector<Elem>& table() const { return map_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_zero() const;
  /// Throws NotLinear when the table is not additive or not R-linear.
  void check_linear() const;

  bool operator==(const ModuleHom& other) const { return map_ == other.map_; }

 private:
  ModulePtr source_;
  ModulePtr target_;
  std::vector<Elem> map_;
};

ModuleHom identity_hom(const ModulePtr& m);
ModuleHom zero_hom(const ModulePtr& source, const ModulePtr& target);
/// outer ∘ inner
ModuleHom compose(const ModuleHom& outer, const ModuleHom& inner);
ModuleHom add_homs(const ModuleHom& a, const ModuleHom& b);

/// M viewed over R through a ring map R → H (M is an H-module).
ModulePtr restrict_scalars(const ModulePtr& m, const RingPtr& base, const std::vector<Elem>& ring_map,
                           std::string label);

}  // namespace qhull
