#include <gtest/gtest.h>

#include "qhull/density.hpp"
#include "qhull/error.hpp"
#include "qhull/hulls.hpp"
#include "qhull/quotient_rings.hpp"
#include "sample_modules.hpp"

using namespace qhull;
using namespace qhull::testing;

namespace {

MatrixRing t2f2() { return upper_triangular_ring(galois_field(2), 2); }

// M2(F2) as a right T2(F2)-module through the corner inclusion.
ModulePtr m2_over_t2() {
  const auto t2 = t2f2();
  const auto m2 = matrix_ring(galois_field(2), 2);
  return as_right_module(make_ring_embedding(t2.ring, m2.ring, matrix_inclusion(t2, m2)), "M2");
}

// The corner (0 0;0 F) sits in the bottom row as the elements with zero first entry.
Submodule corner_in_bottom(const ModulePtr& bottom) {
  for (Elem x = 1; x < bottom->order(); ++x) {
    const auto c = cyclic_submodule(bottom, x);
    if (c.size() == 2) {
      bool stable = true;
      for (Elem r = 0; r < bottom->ring()->order(); ++r) stable = stable && c.contains(bottom->act(x, r));
      if (stable) return c;
    }
  }
  throw std::logic_error("no corner");
}

}  // namespace

// =============================================================================
// Essential and dense submodules
// =============================================================================

TEST(Essential, IndependentSummandIsNot) {
  const auto z2 = zmod_over(4, 2);
  const auto sum = direct_sum({z2, z2});
  const auto n = cyclic_submodule(sum.module, sum.injections[0](1));
  const auto v = is_essential(n, sum.module);
  EXPECT_FALSE(v.answer);
  ASSERT_EQ(v.witness.size(), 1u);
  const auto w = cyclic_submodule(sum.module, v.witness[0]);
  EXPECT_FALSE(w.is_zero());
  EXPECT_TRUE(submodule_intersection(w, n).is_zero());
}

TEST(Essential, CornerInBottomRow) {
  const auto bottom = t2_bottom_row(t2f2());
  const auto corner = corner_in_bottom(bottom);
  EXPECT_TRUE(is_essential(corner, bottom).answer);
  EXPECT_TRUE(is_dense(corner, bottom).answer);
  // Hom((0 0;F F)/(0 0;0 F), E(M)) has only the zero map.
  const auto q = quotient_module(bottom, corner).module;
  const auto e = injective_hull(bottom).hull;
  EXPECT_EQ(hom_count(q, e), 1u);
  EXPECT_TRUE(dense_by_quotient_homs(corner, e));
}

TEST(Dense, T2InsideM2) {
  const auto m = m2_over_t2();
  const auto t2 = t2f2();
  const auto m2 = matrix_ring(galois_field(2), 2);
  auto members = matrix_inclusion(t2, m2);
  std::sort(members.begin(), members.end());
  const auto n = make_submodule(m, members);
  EXPECT_TRUE(is_dense(n, m, Context{}.with_debug(true)).answer);
}

TEST(RelativeDensity, CornerInsideItsHull) {
  const auto e = injective_hull(t2_corner(t2f2()));
  EXPECT_TRUE(rel_dense_in(e.image(), whole_submodule(e.hull), e.hull).answer);
}

TEST(RelativeDensity, TwoInZ4AgainstZ2) {
  const auto z4 = regular(zmod(4));
  const auto n = cyclic_submodule(z4, 2);
  const auto v = is_rel_dense(n, z4, zmod_over(4, 2));
  EXPECT_FALSE(v.answer);
  EXPECT_FALSE(is_ideal_rel_dense(n, zmod_over(4, 2)).answer);
  EXPECT_TRUE(is_rel_dense(whole_submodule(z4), z4, zmod_over(4, 2)).answer);
}

TEST(TwoSided, Z4Ideals) {
  const auto z4 = regular(zmod(4));
  const auto two = two_sided_density_checks(cyclic_submodule(z4, 2), z4);
  EXPECT_FALSE(two.lk_zero);
  EXPECT_FALSE(two.dense);
  EXPECT_TRUE(two.consistent());
  const auto zero = two_sided_density_checks(zero_submodule(z4), z4);
  EXPECT_FALSE(zero.lr_zero);
  EXPECT_FALSE(zero.dense);
  const auto whole = two_sided_density_checks(whole_submodule(z4), z4);
  EXPECT_TRUE(whole.lk_zero && whole.lek_zero && whole.dense && whole.lr_zero);
}

// =============================================================================
// Injectivity and module classes
// =============================================================================

TEST(Injective, M2OverT2) {
  EXPECT_TRUE(is_injective(m2_over_t2()));
  EXPECT_TRUE(is_quasi_continuous(m2_over_t2()));
}

TEST(Injective, Z4AndZ2) {
  EXPECT_TRUE(is_injective(regular(zmod(4))));
  EXPECT_FALSE(is_injective(zmod_over(4, 2)));
  const auto h = injective_hull(regular(zmod(4)));
  EXPECT_TRUE(h.embedding.is_surjective());
}

TEST(Classes, SemisimpleSquare) {
  const auto f2 = regular(zmod(2));
  const auto m = direct_sum({f2, f2}).module;
  EXPECT_TRUE(is_quasi_injective(m));
  EXPECT_TRUE(is_quasi_continuous(m));
  EXPECT_TRUE(is_extending(m));
  EXPECT_TRUE(is_continuous(m));
}

TEST(Classes, SemisimpleRingModulesArePolyform) {
  const auto r = matrix_ring(galois_field(2), 2).ring;
  EXPECT_TRUE(is_polyform(regular(r)));
  EXPECT_TRUE(is_polyform(direct_sum({regular(galois_field(4)), regular(galois_field(4))}).module));
}

TEST(Classes, Z2OverZ4IsSingular) {
  EXPECT_FALSE(is_nonsingular(zmod_over(4, 2)));
  EXPECT_TRUE(is_nonsingular(t2_corner(t2f2())));
  EXPECT_TRUE(is_rationally_complete(zmod_over(4, 2)));
  EXPECT_EQ(quasi_injective_hull(zmod_over(4, 2)).hull->order(), 2u);
}

// =============================================================================
// Extensions of maps into rational hulls
// =============================================================================

TEST(ExtendHom, IdentityOnCorner) {
  const auto bottom = t2_bottom_row(t2f2());
  const auto sm = submodule_as_module(corner_in_bottom(bottom));
  const auto ext = extend_hom(sm, identity_hom(sm.module));
  EXPECT_EQ(ext.k_hull.hull->order(), 4u);
  EXPECT_TRUE(ext.map.is_injective());
  EXPECT_TRUE(ext.map.is_surjective());
  EXPECT_TRUE(ext.image_dense);
}

TEST(ExtendHom, ZeroExtendsToZero) {
  const auto bottom = t2_bottom_row(t2f2());
  const auto sm = submodule_as_module(corner_in_bottom(bottom));
  const auto ext = extend_hom(sm, zero_hom(sm.module, sm.module));
  EXPECT_TRUE(ext.map.is_zero());
}

// =============================================================================
// Direct sums
// =============================================================================

TEST(DirectSumHull, CompleteSummands) {
  const auto rep = direct_sum_hull_check({regular(zmod(4)), zmod_over(4, 2)});
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.sum_hull_order, 8u);
  EXPECT_TRUE(rep.biconditional_holds);
}

TEST(DirectSumHull, InjectiveSquare) {
  const auto z4 = regular(zmod(4));
  EXPECT_TRUE(direct_sum_hull_check({z4, z4}).equal);
}

TEST(DirectSumHull, RegularWithCorner) {
  const auto t2 = t2f2();
  const auto rep = direct_sum_hull_check({regular(t2.ring), t2_corner(t2)});
  EXPECT_TRUE(rep.contained);
  EXPECT_TRUE(rep.biconditional_holds);
  EXPECT_EQ(rep.equal, rep.all_pairwise);
}
