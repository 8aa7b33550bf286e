#pragma once

#include <optional>
#include <vector>

#include "qhull/config.hpp"
#include "qhull/density.hpp"
#include "qhull/hom.hpp"
#include "qhull/structure.hpp"

namespace qhull {

enum class HullKind { Injective, Rational, QuasiInjective };

struct HullResult {
  ModulePtr hull;
  ModuleHom embedding;  // input → hull
  HullKind kind;

  Submodule image() const { return qhull::image(embedding); }
};

/// Baer: |Hom(J, M)| = |M| / |{m : mJ = 0}| for every right ideal J.
bool is_injective(const ModulePtr& m, const Context& ctx = {});

/// Embeds M in the coinduced module Hom_Z(R, C) and climbs to a maximal
/// essential extension, scanning candidates in canonical order.
HullResult injective_hull(const ModulePtr& m, const Context& ctx = {});

/// {x ∈ E : x·r passes the M-density test for every r}, for M ⊆ E essential.
Submodule rational_hull_within(const Submodule& m_image);

enum class RationalFormula {
  Annihilator,       // r_E(l_T(M))
  ElementScan,       // ∀ 0 ≠ y ∈ E: y·x⁻¹M ≠ 0, by scanning x⁻¹M
  RelativeDensity,   // x⁻¹M ≤den_M R
  QuotientHoms,      // Hom(R/x⁻¹M, E) = 0
  IdealAnnihilator,  // l_E(x⁻¹M) = 0 via generators of x⁻¹M
};
const std::vector<RationalFormula>& all_rational_formulas();
const char* formula_name(RationalFormula f);
/// The subset of E selected by one formula; M ⊆ E given by `m_image`.
Submodule rational_hull_by(RationalFormula f, const Submodule& m_image, const Context& ctx = {});
/// {x ∈ E : every θ ∈ End(E) with θ|_M = 1 fixes x}.
Submodule rational_hull_by_fixed_points(const Submodule& m_image, const Context& ctx = {});

HullResult rational_hull(const ModulePtr& m, const Context& ctx = {});
/// ŴM = End(E(M))·M inside E(M).
HullResult quasi_injective_hull(const ModulePtr& m, const Context& ctx = {});

bool is_rationally_complete(const ModulePtr& m, const Context& ctx = {});
/// No x ∈ E(M) \ M has l_E(x⁻¹M) = 0.
bool rationally_complete_by_cosets(const ModulePtr& m, const Context& ctx = {});
/// Every map from an M-dense right ideal into M extends uniquely to R.
bool rationally_complete_by_extension(const ModulePtr& m, const Context& ctx = {});

/// θ(M) ⊆ M for all θ ∈ End(E(M)).
bool is_quasi_injective(const ModulePtr& m, const Context& ctx = {});
/// f(M) ⊆ M for all idempotents f ∈ End(E(M)).
bool is_quasi_continuous(const ModulePtr& m, const Context& ctx = {});
/// Direct summands of M: images of idempotents of End(M), ordered by size then members.
std::vector<Submodule> direct_summands(const ModulePtr& m, const Context& ctx = {});
bool is_extending(const ModulePtr& m, const Context& ctx = {});
/// Extending, and every monomorphic image of a summand is a summand.
bool is_continuous(const ModulePtr& m, const Context& ctx = {});
bool is_polyform(const ModulePtr& m, const Context& ctx = {});
/// Z(M) = {m : r_R(m) ≤ess R} is zero.
bool is_nonsingular(const ModulePtr& m, const Context& ctx = {});
Submodule singular_submodule(const ModulePtr& m);

struct ExtendedHom {
  ModuleHom map;            // M → Ẽ(K)
  HullResult k_hull;        // Ẽ(K) with K ↪ Ẽ(K)
  bool image_dense = false; // φN ≤den φ̃M
};
/// Unique φ̃ : M → Ẽ(K) extending φ : N → K, where `n` is N ≤ M.
/// Throws PreconditionFailed when N is not K-dense in M.
ExtendedHom extend_hom(const SubmoduleModule& n, const ModuleHom& phi, const Context& ctx = {});

/// {α ∈ End(E(M)) : Ker α ≤ess E(M)}.
struct EndOfHull {
  EndRing t;
  std::vector<Elem> jacobson;
};
EndOfHull end_of_hull(const ModulePtr& m, const Context& ctx = {});

struct DirectSumHullReport {
  std::size_t sum_hull_order = 0;
  std::size_t sum_of_hulls_order = 0;
  bool contained = false;          // Ẽ(⊕M_k) ⊆ ⊕Ẽ(M_k)
  bool equal = false;
  std::vector<std::vector<bool>> pairwise;  // M_i is M_j-dense in Ẽ(M_i)
  bool all_pairwise = false;
  bool biconditional_holds = false;
};
DirectSumHullReport direct_sum_hull_check(const std::vector<ModulePtr>& parts, const Context& ctx = {});

}  // namespace qhull
