#pragma once

#include <string>
#include <vector>

#include "qhull/constructions.hpp"
#include "qhull/structure.hpp"

namespace qhull::testing {

// Z/m viewed over Z/n (m | n).
inline ModulePtr zmod_over(Elem n, Elem m) {
  const auto ring = zmod(n);
  std::vector<std::vector<Elem>> add(m, std::vector<Elem>(m)), act(m, std::vector<Elem>(n));
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) add[a][b] = (a + b) % m;
    for (Elem k = 0; k < n; ++k) act[a][ring->from_int(k)] = (a * k) % m;
  }
  return module_from_action(ring, add, act, "Z/" + std::to_string(m));
}

inline ModulePtr regular(const RingPtr& r) { return regular_module(r); }

// Small modules over several rings, including non-injective and singular ones.
inline std::vector<ModulePtr> sample_modules() {
  const auto t2 = upper_triangular_ring(galois_field(2), 2);
  const auto f2xf2 = product_ring(galois_field(2), galois_field(2));
  std::vector<ModulePtr> out{
      regular(zmod(2)),       regular(zmod(4)),   regular(zmod(6)), regular(zmod(8)),
      zmod_over(4, 2),        zmod_over(8, 2),    zmod_over(8, 4),  regular(galois_field(4)),
      regular(f2xf2),         regular(t2.ring),   t2_bottom_row(t2), t2_corner(t2),
  };
  auto r = regular(t2.ring);
  for (const auto& s : enumerate_submodules(r, 100))
    if (!s.is_zero() && !s.is_whole()) out.push_back(quotient_module(r, s, "T2/I").module);
  return out;
}

}  // namespace qhull::testing
