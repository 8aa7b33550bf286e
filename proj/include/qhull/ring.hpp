#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qhull/abelian.hpp"

namespace qhull {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// A finite unital ring on canonically ordered elements. Immutable.
class FiniteRing {
 public:
  /// Trusted constructor: tables are already in canonical order. Use
  /// validate_ring for untrusted input.
  FiniteRing(std::string name, AbelianGroup group, std::vector<Elem> mul, Elem one);

  const std::string& name() const { return name_; }
  std::size_t order() const { return group_.order(); }
  const AbelianGroup& group() const { return group_; }
  std::span<const std::uint32_t> invariant_factors() const { return group_.factors(); }
  /// Least n > 0 with n·1 = 0.
  std::uint64_t characteristic() const { return char_; }
  Elem one() const { return one_; }
  Elem zero() const { return 0; }

  Elem add(Elem a, Elem b) const { return group_.add(a, b); }
  Elem neg(Elem a) const { return group_.neg(a); }
  Elem sub(Elem a, Elem b) const { return group_.sub(a, b); }
  Elem mul(Elem a, Elem b) const { return mul_[a * order() + b]; }
  /// k·1.
  Elem from_int(std::int64_t k) const { return group_.scale(k, one_); }
  /// Additive generators (unit coordinate vectors).
  std::vector<Elem> additive_generators() const;
  bool is_commutative() const;

  const std::vector<Elem>& mul_table() const { return mul_; }

 private:
  std::string name_;
  AbelianGroup group_;
  std::vector<Elem> mul_;
  Elem one_;
  std::uint64_t char_;
};

/// Ring with the labeling that maps the caller's element labels to canonical indices.
struct ValidatedRing {
  RingPtr ring;
  std::vector<Elem> from_label;
};

/// Validates arbitrary-labeled tables (label 0 must be the additive identity)
/// and relabels them canonically. Checks run in the order group, unity,
/// distributivity, associativity; the first violation is reported with its
/// witnessing elements (in the caller's labels).
ValidatedRing validate_ring_labeled(std::string name, const std::vector<std::vector<Elem>>& add_table,
                                    const std::vector<std::vector<Elem>>& mul_table, Elem one);

RingPtr validate_ring(std::string name, const std::vector<std::vector<Elem>>& add_table,
                      const std::vector<std::vector<Elem>>& mul_table, Elem one);

/// Exhaustive axiom check on a canonical ring (throws on the first violation).
void check_ring_axioms(const FiniteRing& ring);

/// Same tables (not just isomorphic).
bool same_ring(const FiniteRing& a, const FiniteRing& b);

/// All e with e·e = e, ascending.
std::vector<Elem> idempotents(const FiniteRing& ring);

}  // namespace qhull
