#pragma once

#include <string>
#include <vector>

#include "qhull/config.hpp"
#include "qhull/structure.hpp"

namespace qhull {

/// Outcome of a density-type predicate. A false answer carries a witness:
/// (m) for essentiality, (x, y) for density, (m, x) for relative density.
struct DensityVerdict {
  bool answer = true;
  std::vector<Elem> witness;
  std::string method;

  explicit operator bool() const { return answer; }
};

/// N ≤ess V for submodules N ⊆ V of a common ambient module.
DensityVerdict essential_in(const Submodule& n, const Submodule& v);
DensityVerdict is_essential(const Submodule& n, const ModulePtr& m);

/// N ≤den V for N ⊆ V: for x, 0 ≠ y in V some r has xr ∈ N and yr ≠ 0.
DensityVerdict dense_in(const Submodule& n, const Submodule& v);
/// Definition scan; with debug_crosscheck also Hom(M/N, E(M)) = 0 and the
/// intermediate-submodule criterion, failing on disagreement.
DensityVerdict is_dense(const Submodule& n, const ModulePtr& m, const Context& ctx = {});

/// N ≤den_K V for N ⊆ V: for m in V and 0 ≠ x in K, x·m⁻¹N ≠ 0.
DensityVerdict rel_dense_in(const Submodule& n, const Submodule& v, const ModulePtr& k);
DensityVerdict is_rel_dense(const Submodule& n, const ModulePtr& m, const ModulePtr& k, const Context& ctx = {});
/// I ≤den_K R for a right ideal I.
DensityVerdict is_ideal_rel_dense(const RightIdeal& i, const ModulePtr& k, const Context& ctx = {});

/// Hom(M/N, E) = 0 where M is N's ambient.
bool dense_by_quotient_homs(const Submodule& n, const ModulePtr& e);
/// Hom(P/N, K) = 0 for every N ≤ P ≤ M.
bool dense_by_intermediate(const Submodule& n, const ModulePtr& k, std::uint64_t lattice_cap);
/// No nonzero map M → E vanishes on N (enumerates Hom(M, E)).
bool dense_by_hom_annihilator(const Submodule& n, const ModulePtr& e, std::uint64_t hom_cap);
/// {y ∈ E : y·I = 0} = 0.
bool ideal_dense_by_annihilator(const RightIdeal& i, const ModulePtr& e);

struct TwoSidedReport {
  bool lk_zero = false;   // l_K(I) = 0
  bool lek_zero = false;  // l_{E(K)}(I) = 0
  bool dense = false;     // I ≤den R_R
  bool lr_zero = false;   // l_R(I) = 0
  bool consistent() const { return lk_zero == lek_zero && dense == lr_zero; }
};
/// Throws NotTwoSided unless I is a two-sided ideal.
TwoSidedReport two_sided_density_checks(const RightIdeal& i, const ModulePtr& k, const Context& ctx = {});

}  // namespace qhull
