#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qhull {

/// Index of an element in canonical order. 0 is always the zero element.
using Elem = std::uint32_t;

/// Finite abelian group ⊕ Z/q_i with every q_i a prime power, sorted by prime
/// ascending and then by exponent descending. Element indices are the
/// coordinate vectors read as mixed-radix numbers, first factor most
/// significant; this is the canonical element order used everywhere.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// `factors` must already be in canonical order.
  explicit AbelianGroup(std::vector<std::uint32_t> factors);

  std::size_t order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }
  std::span<const std::uint32_t> factors() const { return factors_; }
  std::uint32_t factor(std::size_t i) const { return factors_[i]; }
  /// Prime dividing factor i.
  std::uint32_t prime(std::size_t i) const { return primes_[i]; }
  std::uint64_t exponent() const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem scale(std::int64_t k, Elem a) const;

  std::uint32_t coord(Elem a, std::size_t i) const { return (a / strides_[i]) % factors_[i]; }
  void coords(Elem a, std::span<std::uint32_t> out) const;
  std::vector<std::uint32_t> coords(Elem a) const;
  /// Reduces every entry modulo its factor.
  Elem from_coords(std::span<const std::int64_t> c) const;
  Elem from_coords(std::span<const std::uint32_t> c) const;
  /// Unit coordinate vector e_i.
  Elem generator(std::size_t i) const { return static_cast<Elem>(strides_[i]); }
  std::uint64_t element_order(Elem a) const;

  bool operator==(const AbelianGroup& other) const { return factors_ == other.factors_; }

 private:
  std::vector<std::uint32_t> factors_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::uint64_t> strides_;
  std::size_t order_ = 1;
  std::vector<Elem> add_table_;  // filled for small orders only
};

/// Sorts prime-power factors into canonical order. Returns the permutation
/// applied: result[i] is the original position of the i-th sorted factor.
std::vector<std::size_t> canonical_factor_order(std::span<const std::uint32_t> factors);

/// Smallest prime dividing n (n >= 2).
std::uint32_t smallest_prime(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

/// Outcome of decomposing an abstractly given abelian group.
struct Decomposition {
  AbelianGroup group;
  /// canonical index -> caller's label
  std::vector<Elem> to_label;
  /// caller's label -> canonical index
  std::vector<Elem> from_label;
};

/// Decomposes the group on labels 0..n-1 (label 0 must be the identity) with
/// the given addition into canonical form. When the labels already follow
/// the canonical order for the group's invariant factors they are kept.
/// Throws AlgebraError(NotAGroup) when `add` is not an abelian group law.
Decomposition decompose(std::size_t n, const std::function<Elem(Elem, Elem)>& add);

}  // namespace qhull
