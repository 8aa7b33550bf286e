#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qhull/hom.hpp"
#include "qhull/module.hpp"

namespace qhull {

/// A ring built from trusted operations on labels 0..n-1 (0 = zero).
struct BuiltRing {
  RingPtr ring;
  std::vector<Elem> to_label;
  std::vector<Elem> from_label;
};
BuiltRing ring_from_operations(std::string name, std::size_t n, const std::function<Elem(Elem, Elem)>& add,
                               const std::function<Elem(Elem, Elem)>& mul, Elem one_label);

RingPtr zmod(std::uint32_t n);
/// F_q for a prime power q; polynomial basis over F_p.
RingPtr galois_field(std::uint32_t q);
RingPtr product_ring(const RingPtr& a, const RingPtr& b);

/// Square matrices over a base ring. entries[i] lists the n·n entries of
/// ring element i row-major, as base-ring indices.
struct MatrixRing {
  RingPtr ring;
  RingPtr base;
  std::size_t n = 0;
  std::vector<std::vector<Elem>> entries;
  std::unordered_map<std::vector<Elem>, Elem, VectorHash> index;

  Elem index_of(const std::vector<Elem>& e) const;
};
MatrixRing matrix_ring(const RingPtr& base, std::size_t n);
/// Upper triangular n×n matrices.
MatrixRing upper_triangular_ring(const RingPtr& base, std::size_t n);
/// Inclusion of a matrix subring into a full matrix ring of the same size.
std::vector<Elem> matrix_inclusion(const MatrixRing& sub, const MatrixRing& full);

/// Over T = T2(F): the bottom row (0 0; x y) with (x, y)·(a b; 0 c) = (xa, xb + yc).
ModulePtr t2_bottom_row(const MatrixRing& t2);
/// Over T = T2(F): the corner (0 0; 0 y) with y·(a b; 0 c) = yc.
ModulePtr t2_corner(const MatrixRing& t2);

/// R/I for a right ideal I.
ModulePtr cyclic_quotient(const RingPtr& ring, const std::vector<Elem>& ideal_members, std::string label);

}  // namespace qhull
