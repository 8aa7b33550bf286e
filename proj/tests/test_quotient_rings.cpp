#include <gtest/gtest.h>

#include "qhull/error.hpp"
#include "qhull/quotient_rings.hpp"
#include "sample_modules.hpp"

using namespace qhull;
using namespace qhull::testing;

namespace {

RingEmbedding corner_embedding(std::uint32_t q) {
  const auto t2 = upper_triangular_ring(galois_field(q), 2);
  const auto m2 = matrix_ring(galois_field(q), 2);
  return make_ring_embedding(t2.ring, m2.ring, matrix_inclusion(t2, m2));
}

// F2 → F2×F2, 1 ↦ (1,1).
RingEmbedding diagonal_f2() {
  const auto f2 = galois_field(2);
  const auto p = product_ring(f2, f2);
  return make_ring_embedding(f2, p, {0, p->one()});
}

}  // namespace

TEST(QMax, SelfInjectiveZMod) {
  for (std::uint32_t n = 2; n <= 12; ++n) {
    const auto q = q_max(zmod(n));
    EXPECT_EQ(q.q->order(), n);
    EXPECT_TRUE(q.embedding.is_surjective());
  }
}

TEST(QMax, T2F2IsM2F2) {
  const auto emb = corner_embedding(2);
  const auto q = q_max(emb.source);
  EXPECT_EQ(q.q->order(), 16u);
  EXPECT_EQ(q.hull.hull->order(), 16u);
  EXPECT_EQ(q.hull.hull->label(), "~E(" + regular_module(emb.source)->label() + ")");
  const auto psi = identify_quotient_ring(q, emb);
  ASSERT_TRUE(psi.has_value());
  EXPECT_TRUE(psi->is_surjective());
  for (Elem r = 0; r < emb.source->order(); ++r) EXPECT_EQ((*psi)(q.embedding(r)), emb(r));
}

TEST(QMax, T2F3IsM2F3) {
  const auto emb = corner_embedding(3);
  const auto q = q_max(emb.source);
  EXPECT_EQ(q.q->order(), 81u);
  EXPECT_TRUE(identify_quotient_ring(q, emb).has_value());
}

TEST(QMax, SemisimpleAndIdempotent) {
  const auto p = product_ring(galois_field(2), galois_field(2));
  EXPECT_EQ(q_max(p).q->order(), 4u);
  const auto q = q_max(upper_triangular_ring(galois_field(2), 2).ring);
  const auto qq = q_max(q.q);
  EXPECT_EQ(qq.q->order(), q.q->order());
  EXPECT_TRUE(qq.embedding.is_surjective());
}

TEST(QMax, SimpleRingStaysSimple) {
  const auto m2 = matrix_ring(galois_field(2), 2).ring;
  EXPECT_TRUE(is_simple_ring(m2));
  EXPECT_TRUE(is_simple_ring(q_max(m2).q));
  EXPECT_FALSE(is_simple_ring(upper_triangular_ring(galois_field(2), 2).ring));
}

TEST(RingOfQuotients, Examples) {
  EXPECT_TRUE(is_right_ring_of_quotients(identity_embedding(zmod(4))).answer);
  EXPECT_TRUE(is_right_ring_of_quotients(corner_embedding(2)).answer);
  const auto v = is_right_ring_of_quotients(diagonal_f2());
  EXPECT_FALSE(v.answer);
  EXPECT_EQ(v.witness.size(), 2u);
}

TEST(RingOfQuotients, QMaxEmbeddingQualifies) {
  for (auto r : {zmod(4), zmod(8), upper_triangular_ring(galois_field(2), 2).ring}) {
    EXPECT_TRUE(is_right_ring_of_quotients(q_max(r).embedding).answer) << r->name();
  }
}

TEST(RingEmbedding, RejectsNonMultiplicative) {
  const auto z4 = zmod(4);
  EXPECT_THROW(make_ring_embedding(z4, z4, {0, 1, 3, 2}), AlgebraError);
}

TEST(Omega, CornerIsIsomorphism) {
  const auto t2 = upper_triangular_ring(galois_field(2), 2);
  const auto om = omega(t2_corner(t2));
  EXPECT_EQ(om.end_m.ring->order(), 2u);
  EXPECT_EQ(om.end_hull.ring->order(), 2u);
  EXPECT_TRUE(om.surjective);
  EXPECT_EQ(om.hull.hull->order(), 4u);
}

TEST(Omega, RegularT2IsProper) {
  const auto t2 = upper_triangular_ring(galois_field(2), 2);
  const auto om = omega(regular(t2.ring));
  EXPECT_EQ(om.end_m.ring->order(), 8u);
  EXPECT_EQ(om.end_hull.ring->order(), 16u);
  EXPECT_FALSE(om.surjective);
}

TEST(Omega, RestrictsToPhiEverywhere) {
  const Context debug = Context{}.with_debug(true);
  for (const auto& m : sample_modules()) {
    const auto om = omega(m, debug);
    for (Elem f = 0; f < om.end_m.homs.size(); ++f)
      for (Elem x = 0; x < m->order(); ++x)
        EXPECT_EQ(om.end_hull.homs[om.omega(f)](om.hull.embedding(x)), om.hull.embedding(om.end_m.homs[f](x)));
  }
}

TEST(Omega, InjectiveModuleGivesIdentity) {
  const auto om = omega(regular(zmod(4)));
  EXPECT_TRUE(om.surjective);
  EXPECT_EQ(om.end_m.ring->order(), 4u);
}

TEST(EndTransfer, RegularM2F2OverT2) {
  const auto emb = corner_embedding(2);
  const auto rep = end_transfer_check(regular_module(emb.target), emb);
  EXPECT_TRUE(rep.premise);
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.end_r, 16u);
  EXPECT_TRUE(rep.ring_of_quotients);
  EXPECT_TRUE(rep.dense_over_hull);
  EXPECT_TRUE(rep.projective);
  EXPECT_TRUE(rep.holds());
}

TEST(EndTransfer, FreeRankTwo) {
  const auto emb = corner_embedding(2);
  const auto h = regular_module(emb.target);
  const auto rep = end_transfer_check(direct_sum({h, h}).module, emb);
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.end_h, 65536u);  // |Mat2(M2(F2))| = 2^16
  EXPECT_TRUE(rep.holds());
}

TEST(EndTransfer, IdentityEmbedding) {
  const auto r = zmod(4);
  const auto rep = end_transfer_check(zmod_over(4, 2), identity_embedding(r));
  EXPECT_TRUE(rep.equal);
  EXPECT_TRUE(rep.holds());
}

TEST(EndTransfer, RingMismatch) {
  EXPECT_THROW(end_transfer_check(regular(zmod(2)), corner_embedding(2)), AlgebraError);
}

TEST(MatrixQuotient, Instances) {
  const auto a = matrix_quotient_check(upper_triangular_ring(galois_field(2), 2).ring, 1, 1);
  EXPECT_TRUE(a.holds());
  EXPECT_EQ(a.end_order, 16u);
  const auto b = matrix_quotient_check(zmod(4), 1, 2);
  EXPECT_TRUE(b.holds());
  EXPECT_EQ(b.end_order, 256u);
  const auto c = matrix_quotient_check(galois_field(2), 2, 1);
  EXPECT_TRUE(c.holds());
  EXPECT_EQ(c.end_order, 16u);
}

TEST(QuasiInjectiveOmega, Corner) {
  const auto t2 = upper_triangular_ring(galois_field(2), 2);
  const auto rep = quasi_injective_omega_check(t2_corner(t2));
  EXPECT_TRUE(rep.quasi_injective);
  EXPECT_TRUE(rep.omega_surjective);
  EXPECT_TRUE(rep.proper);
  EXPECT_TRUE(rep.holds());
}

TEST(QuasiInjectiveOmega, RegularT2) {
  const auto t2 = upper_triangular_ring(galois_field(2), 2);
  const auto rep = quasi_injective_omega_check(regular(t2.ring));
  EXPECT_TRUE(rep.polyform);
  EXPECT_FALSE(rep.omega_surjective);
  EXPECT_FALSE(rep.quasi_injective);
  EXPECT_TRUE(rep.holds());
}

TEST(QuasiInjectiveOmega, AllSamples) {
  for (const auto& m : sample_modules()) {
    const auto rep = quasi_injective_omega_check(m);
    EXPECT_TRUE(rep.holds()) << m->label() << ": " << (rep.violations.empty() ? "" : rep.violations.front());
  }
}
