#include <gtest/gtest.h>

#include "qhull/constructions.hpp"
#include "qhull/density.hpp"
#include "qhull/error.hpp"
#include "qhull/hulls.hpp"
#include "sample_modules.hpp"

using namespace qhull;
using namespace qhull::testing;

namespace {

bool naive_essential(const Submodule& n, const Submodule& v) {
  for (auto x : v.members()) {
    if (x == 0) continue;
    bool meets = false;
    const auto xr = cyclic_submodule(v.ambient(), x);
    for (auto y : xr.members())
      if (y != 0 && n.contains(y)) meets = true;
    if (!meets) return false;
  }
  return true;
}

bool naive_dense(const Submodule& n, const Submodule& v) {
  const auto& m = *v.ambient();
  for (auto x : v.members())
    for (auto y : v.members()) {
      if (y == 0) continue;
      bool found = false;
      for (Elem r = 0; r < m.ring()->order() && !found; ++r) found = n.contains(m.act(x, r)) && m.act(y, r) != 0;
      if (!found) return false;
    }
  return true;
}

bool naive_rel_dense(const Submodule& n, const Submodule& v, const ModulePtr& k) {
  const auto& m = *v.ambient();
  for (auto x : v.members())
    for (Elem y = 1; y < k->order(); ++y) {
      bool found = false;
      for (Elem r = 0; r < m.ring()->order() && !found; ++r) found = n.contains(m.act(x, r)) && k->act(y, r) != 0;
      if (!found) return false;
    }
  return true;
}

}  // namespace

TEST(Density, TwoInZ4IsEssentialNotDense) {
  const auto m = regular(zmod(4));
  const auto n = cyclic_submodule(m, zmod(4)->from_int(2));
  EXPECT_TRUE(is_essential(n, m).answer);
  const auto d = is_dense(n, m);
  EXPECT_FALSE(d.answer);
  ASSERT_EQ(d.witness.size(), 2u);
  // The witness pair (x, y) admits no r with x r ∈ N and y r ≠ 0.
  for (Elem r = 0; r < 4; ++r)
    EXPECT_FALSE(n.contains(m->act(d.witness[0], r)) && m->act(d.witness[1], r) != 0);
}

TEST(Density, MatchesDefinitionOnAllSubmodules) {
  for (const auto& m : sample_modules()) {
    const auto subs = enumerate_submodules(m, 1000);
    for (const auto& v : subs)
      for (const auto& n : subs) {
        if (!n.subset_of(v)) continue;
        EXPECT_EQ(essential_in(n, v).answer, naive_essential(n, v)) << m->label();
        EXPECT_EQ(dense_in(n, v).answer, naive_dense(n, v)) << m->label();
      }
  }
}

TEST(Density, RelativeMatchesDefinition) {
  const auto mods = sample_modules();
  for (const auto& m : mods) {
    const auto subs = enumerate_submodules(m, 1000);
    for (const auto& k : mods) {
      if (!same_ring(*k->ring(), *m->ring())) continue;
      for (const auto& n : subs)
        EXPECT_EQ(rel_dense_in(n, whole_submodule(m), k).answer, naive_rel_dense(n, whole_submodule(m), k))
            << m->label() << " / " << k->label();
    }
  }
}

TEST(Density, CrosscheckedCriteriaAgree) {
  const Context debug = Context{}.with_debug(true);
  for (const auto& m : sample_modules())
    for (const auto& n : enumerate_submodules(m, 1000)) {
      EXPECT_NO_THROW(is_dense(n, m, debug)) << m->label();
      EXPECT_NO_THROW(is_rel_dense(n, m, m, debug)) << m->label();
    }
}

TEST(Density, DenseImpliesRelativeToSelf) {
  for (const auto& m : sample_modules())
    for (const auto& n : enumerate_submodules(m, 1000))
      if (is_dense(n, m).answer) EXPECT_TRUE(is_rel_dense(n, m, m).answer);
}

TEST(Density, RelativeDensityWithoutEssentiality) {
  // In F2×F2, e1R is e1R-dense in R yet misses e2R.
  const auto r = product_ring(galois_field(2), galois_field(2));
  const auto m = regular(r);
  Elem e1 = 0;
  for (Elem x = 1; x < r->order(); ++x)
    if (x != r->one() && r->mul(x, x) == x) {
      e1 = x;
      break;
    }
  const auto n = cyclic_submodule(m, e1);
  const auto k = submodule_as_module(n, "e1R").module;
  EXPECT_TRUE(is_rel_dense(n, m, k).answer);
  EXPECT_FALSE(is_essential(n, m).answer);
}

TEST(Density, IdealRelativeDensityCrosscheck) {
  const Context debug = Context{}.with_debug(true);
  for (const auto& k : sample_modules()) {
    for (const auto& i : enumerate_right_ideals(k->ring(), 1000)) {
      const auto v = is_ideal_rel_dense(i, k, debug);
      EXPECT_EQ(v.answer, naive_rel_dense(i, whole_submodule(i.ambient()), k)) << k->label();
    }
  }
}

TEST(Density, TwoSidedIdealReports) {
  const Context ctx;
  for (const auto& k : sample_modules())
    for (const auto& i : enumerate_right_ideals(k->ring(), 1000)) {
      if (!is_two_sided(i)) {
        EXPECT_THROW(two_sided_density_checks(i, k, ctx), AlgebraError);
        continue;
      }
      EXPECT_TRUE(two_sided_density_checks(i, k, ctx).consistent()) << k->label();
    }
}
