#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhull/constructions.hpp"
#include "qhull/hulls.hpp"

namespace qhull {

/// An injective unital ring homomorphism.
struct RingEmbedding {
  RingPtr source;
  RingPtr target;
  std::vector<Elem> map;

  Elem operator()(Elem r) const { return map[r]; }
  bool is_surjective() const;
};

/// Checks +, ×, 1 on all pairs and injectivity; throws InternalInconsistency
/// naming the first failing pair.
RingEmbedding make_ring_embedding(RingPtr source, RingPtr target, std::vector<Elem> map);
RingEmbedding identity_embedding(const RingPtr& r);

struct QuotientRingResult {
  RingPtr q;
  RingEmbedding embedding;        // R → Q
  HullResult hull;                // Ẽ(R_R) with R ↪ Ẽ(R_R)
  ModuleHom module_identification;  // Ẽ(R_R) → Q_R
};

/// Q(R) on the rational hull of R_R. The product q₁q₂ is the unique x in
/// E(R) with x·r = q₁·(q₂·r) for all r in q₂⁻¹R.
QuotientRingResult q_max(const RingPtr& r, const Context& ctx = {});

/// H_R with H a ring and R acting through `emb`.
ModulePtr as_right_module(const RingEmbedding& emb, std::string label);

/// ∀ x ≠ 0, y in H ∃ r: x·r ≠ 0 and y·r ∈ R. Witness (x, y) on failure.
DensityVerdict is_right_ring_of_quotients(const RingEmbedding& emb);

/// The unique R-linear Ψ : Q → H with Ψ∘(R → Q) = `into`, if it exists and
/// is a ring isomorphism.
std::optional<RingEmbedding> identify_quotient_ring(const QuotientRingResult& q, const RingEmbedding& into);

/// Exactly two two-sided ideals.
bool is_simple_ring(const RingPtr& r, const Context& ctx = {});

struct OmegaResult {
  HullResult hull;  // Ẽ(M)
  EndRing end_m;
  EndRing end_hull;
  RingEmbedding omega;  // End(M) → End(Ẽ(M))
  bool surjective = false;
};

/// Ω(φ) is the unique endomorphism of Ẽ(M) restricting to φ on M.
OmegaResult omega(const ModulePtr& m, const Context& ctx = {});

struct EndTransferReport {
  bool premise = false;           // R is M_R-dense in H_R
  std::size_t end_r = 0;          // |End_R(M)|
  std::size_t end_h = 0;          // |End_H(M)|
  bool contained = false;         // End_H(M) ⊆ End_R(M)
  bool equal = false;
  bool ring_of_quotients = false; // H is a right ring of quotients of R
  bool dense_over_hull = false;   // R is E(R)-dense in H_R
  bool nonsingular = false;       // M_R nonsingular
  bool in_free = false;           // M embeds in H^k for some small k
  bool projective = false;        // M is a summand of H^k
  std::vector<std::string> violations;
  bool holds() const { return violations.empty(); }
};

/// End_R(M) versus End_H(M) for an H-module M and R ↪ H.
EndTransferReport end_transfer_check(const ModulePtr& m, const RingEmbedding& emb, const Context& ctx = {});

struct MatrixQuotientReport {
  std::size_t q_order = 0;
  std::size_t hull_order = 0;     // |Ẽ(R^{nk})|
  std::size_t end_order = 0;      // |End_R(Q^{nk})|
  std::size_t matrix_order = 0;   // |Mat_k(Mat_n(Q))|
  bool hull_matches = false;      // Ẽ(R^{nk}) has the order of Q^{nk}
  bool isomorphism = false;       // matrix action is a ring isomorphism
  bool holds() const { return hull_matches && isomorphism; }
};

/// End_R(Ẽ((Rⁿ)^k)) ≅ Mat_k(Mat_n(Q(R))) via the matrix action on Q^{nk}.
MatrixQuotientReport matrix_quotient_check(const RingPtr& r, std::size_t n, std::size_t k, const Context& ctx = {});

struct QuasiInjectiveOmegaReport {
  bool quasi_injective = false;
  bool polyform = false;
  bool omega_surjective = false;
  bool hull_polyform = false;
  bool hull_quasi_injective = false;
  bool proper = false;               // M ⊊ Ẽ(M)
  std::size_t end_order = 0;
  std::size_t end_hull_order = 0;
  std::optional<std::size_t> q_end_order;  // |Q(End(M))| for quasi-injective M
  std::optional<bool> q_end_identified;
  std::vector<std::string> violations;
  bool holds() const { return violations.empty(); }
};

QuasiInjectiveOmegaReport quasi_injective_omega_check(const ModulePtr& m, const Context& ctx = {});

}  // namespace qhull
