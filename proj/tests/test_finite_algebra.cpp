#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "qhull/constructions.hpp"
#include "qhull/error.hpp"
#include "qhull/hom.hpp"
#include "qhull/structure.hpp"

using namespace qhull;

namespace {

std::vector<std::vector<Elem>> mod_table(Elem n, bool mul) {
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) t[a][b] = mul ? (a * b) % n : (a + b) % n;
  return t;
}

// Z/m viewed over Z/n (m | n) with r acting as multiplication by r mod m.
ModulePtr zmod_over(const RingPtr& ring, Elem n, Elem m) {
  std::vector<std::vector<Elem>> add(m, std::vector<Elem>(m)), act(m, std::vector<Elem>(n));
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) add[a][b] = (a + b) % m;
    for (Elem k = 0; k < n; ++k) act[a][ring->from_int(k)] = (a * k) % m;
  }
  return module_from_action(ring, add, act, "Z/" + std::to_string(m));
}

std::set<std::vector<Elem>> tables(const std::vector<ModuleHom>& homs) {
  std::set<std::vector<Elem>> out;
  for (const auto& h : homs) out.insert(h.table());
  return out;
}

Elem t2_elem(const MatrixRing& t, Elem a, Elem b, Elem c) { return t.index_of({a, b, 0, c}); }

}  // namespace

TEST(RingValidation, ZMod4) {
  auto r = validate_ring("Z/4", mod_table(4, false), mod_table(4, true), 1);
  EXPECT_EQ(r->order(), 4u);
  EXPECT_EQ(r->characteristic(), 4u);
  EXPECT_TRUE(r->is_commutative());
}

TEST(RingValidation, UpperTriangularF2) {
  // Labels encode (a, b, c) of (a b; 0 c) as 4a + 2b + c.
  std::vector<std::vector<Elem>> add(8, std::vector<Elem>(8)), mul(8, std::vector<Elem>(8));
  for (Elem x = 0; x < 8; ++x)
    for (Elem y = 0; y < 8; ++y) {
      add[x][y] = x ^ y;
      const Elem a = x >> 2, b = (x >> 1) & 1, c = x & 1;
      const Elem d = y >> 2, e = (y >> 1) & 1, f = y & 1;
      mul[x][y] = ((a * d) << 2) | (((a * e + b * f) & 1) << 1) | (c * f);
    }
  auto r = validate_ring("T2(F2)", add, mul, 5);
  EXPECT_EQ(r->order(), 8u);
  EXPECT_EQ(r->characteristic(), 2u);
  EXPECT_FALSE(r->is_commutative());
}

TEST(RingValidation, CorruptedProductBreaksDistributivity) {
  auto mul = mod_table(4, true);
  mul[2][3] = 1;
  try {
    validate_ring("bad", mod_table(4, false), mul, 1);
    FAIL() << "expected NotDistributive";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDistributive);
  }
}

TEST(RingValidation, NonGroupAddition) {
  auto add = mod_table(4, false);
  add[1][1] = 3;
  try {
    validate_ring("bad", add, mod_table(4, true), 1);
    FAIL() << "expected NotAGroup";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGroup);
  }
}

TEST(RingValidation, MissingUnity) {
  try {
    validate_ring("bad", mod_table(4, false), mod_table(4, true), 2);
    FAIL() << "expected NoUnity";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoUnity);
  }
}

TEST(RingValidation, BuiltinRingsSatisfyAxioms) {
  for (const auto& r : {zmod(6), zmod(8), galois_field(4), galois_field(9), product_ring(zmod(2), zmod(2)),
                        upper_triangular_ring(zmod(3), 2).ring, matrix_ring(zmod(2), 2).ring})
    EXPECT_NO_THROW(check_ring_axioms(*r)) << r->name();
  EXPECT_EQ(galois_field(4)->characteristic(), 2u);
  EXPECT_TRUE(galois_field(4)->is_commutative());
}

TEST(ModuleValidation, QuotientActionOfZMod4) {
  auto r = zmod(4);
  auto m = zmod_over(r, 4, 2);
  EXPECT_EQ(m->order(), 2u);
}

TEST(ModuleValidation, BottomRowOverT2) {
  auto t = upper_triangular_ring(zmod(2), 2);
  auto m = t2_bottom_row(t);
  EXPECT_EQ(m->order(), 4u);
  EXPECT_NO_THROW(check_module_axioms(*m));
  EXPECT_NO_THROW(check_module_axioms(*t2_corner(t)));
}

TEST(ModuleValidation, NotUnital) {
  auto r = zmod(4);
  std::vector<std::vector<Elem>> add{{0, 1}, {1, 0}}, act{{0, 0, 0, 0}, {0, 0, 0, 0}};
  try {
    module_from_action(r, add, act);
    FAIL() << "expected NotUnital";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnital);
  }
}

TEST(ModuleValidation, NotLinear) {
  auto r = zmod(4);
  // Unital but 2 does not act as 1+1.
  std::vector<std::vector<Elem>> add{{0, 1}, {1, 0}}, act(2, std::vector<Elem>(4, 0));
  act[1][r->from_int(1)] = 1;
  act[1][r->from_int(2)] = 1;
  act[1][r->from_int(3)] = 1;
  try {
    module_from_action(r, add, act);
    FAIL() << "expected NotLinear";
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLinear);
  }
}

TEST(Hom, Z2IntoZ4) {
  auto r = zmod(4);
  auto z2 = zmod_over(r, 4, 2);
  auto z4 = regular_module(r);
  auto homs = hom_space(z2, z4);
  ASSERT_EQ(homs.size(), 2u);
  EXPECT_EQ(tables(homs), tables(hom_space_all_functions(z2, z4, 1 << 16)));
  EXPECT_EQ(homs[1](1), r->from_int(2));
}

TEST(Hom, EndOfRegularZ4) { EXPECT_EQ(hom_space(regular_module(zmod(4)), regular_module(zmod(4))).size(), 4u); }

TEST(Hom, RingMismatch) {
  try {
    hom_space(regular_module(zmod(4)), regular_module(zmod(2)));
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
}

TEST(Hom, SolverMatchesExhaustiveSearch) {
  std::vector<ModulePtr> mods;
  auto z4 = zmod(4);
  auto z8 = zmod(8);
  auto z6 = zmod(6);
  auto t2 = upper_triangular_ring(zmod(2), 2);
  auto t3 = upper_triangular_ring(zmod(3), 2);
  auto f4 = galois_field(4);
  auto z4r = regular_module(z4);
  auto z2 = cyclic_quotient(z4, {0, z4->from_int(2)}, "Z/2");
  std::vector<std::vector<ModulePtr>> groups{
      {z4r, z2, direct_sum({z4r, z2}).module, direct_sum({z2, z2}).module},
      {regular_module(z8), cyclic_quotient(z8, {0, z8->from_int(4)}, "Z/4"),
       cyclic_quotient(z8, {0, z8->from_int(2), z8->from_int(4), z8->from_int(6)}, "Z/2")},
      {regular_module(z6), cyclic_quotient(z6, {0, z6->from_int(2), z6->from_int(4)}, "Z/2")},
      {regular_module(t2.ring), t2_bottom_row(t2), t2_corner(t2)},
      {regular_module(t3.ring), t2_bottom_row(t3), t2_corner(t3)},
      {regular_module(f4), direct_sum({regular_module(f4), regular_module(f4)}).module},
  };
  for (const auto& g : groups)
    for (const auto& a : g)
      for (const auto& b : g) {
        auto solved = tables(hom_space(a, b));
        EXPECT_EQ(solved.size(), hom_space(a, b).size()) << "duplicates";
        EXPECT_EQ(solved, tables(hom_space_generator_search(a, b, 1 << 20))) << a->label() << " -> " << b->label();
      }
}

TEST(Hom, FactorModuleMapsToCornerHullOnlyByZero) {
  auto t2 = upper_triangular_ring(zmod(2), 2);
  auto row = t2_bottom_row(t2);
  // (0 0;0 F) inside the bottom row: elements with x = 0.
  std::vector<Elem> corner;
  for (Elem u = 0; u < row->order(); ++u) {
    auto s = cyclic_submodule(row, u);
    if (s.size() <= 2) corner.push_back(u);
  }
  auto n = make_submodule(row, corner);
  ASSERT_EQ(n.size(), 2u);
  auto q = quotient_module(row, n).module;
  auto homs = hom_space_all_functions(q, row, 1 << 16);
  ASSERT_EQ(homs.size(), 1u);
  EXPECT_TRUE(homs[0].is_zero());
  EXPECT_EQ(hom_count(q, row), 1u);
}

TEST(EndRing, RegularZ4) {
  auto e = end_ring(regular_module(zmod(4)));
  EXPECT_EQ(e.ring->order(), 4u);
  EXPECT_EQ(e.ring->characteristic(), 4u);
  EXPECT_NO_THROW(check_ring_axioms(*e.ring));
  EXPECT_EQ(e.homs[e.ring->one()], identity_hom(e.base));
}

TEST(EndRing, CornerOverT2IsF2) {
  auto t2 = upper_triangular_ring(zmod(2), 2);
  auto e = end_ring(t2_corner(t2));
  EXPECT_EQ(e.ring->order(), 2u);
}

TEST(EndRing, Z2OverZ4) {
  auto r = zmod(4);
  auto e = end_ring(zmod_over(r, 4, 2));
  EXPECT_EQ(e.ring->order(), 2u);
  EXPECT_EQ(e.ring->order(), hom_space_all_functions(e.base, e.base, 1 << 16).size());
}

TEST(EndRing, CompositionMatchesTable) {
  auto t2 = upper_triangular_ring(zmod(2), 2);
  for (const auto& m : {regular_module(t2.ring), t2_bottom_row(t2),
                        direct_sum({regular_module(zmod(4)), cyclic_quotient(zmod(4), {0, 2}, "Z/2")}).module}) {
    auto e = end_ring(m);
    EXPECT_NO_THROW(check_ring_axioms(*e.ring));
    for (Elem a = 0; a < e.ring->order(); ++a)
      for (Elem b = 0; b < e.ring->order(); ++b) {
        EXPECT_EQ(compose(e.homs[a], e.homs[b]), e.homs[e.ring->mul(a, b)]);
        EXPECT_EQ(add_homs(e.homs[a], e.homs[b]), e.homs[e.ring->add(a, b)]);
      }
  }
}

TEST(Submodules, Generated) {
  auto r = zmod(4);
  auto s = submodule_generated(regular_module(r), {r->from_int(2)});
  EXPECT_EQ(s.members(), (std::vector<Elem>{0, r->from_int(2)}));
}

TEST(Submodules, IdealsOfZ4) { EXPECT_EQ(enumerate_right_ideals(zmod(4), 100).size(), 3u); }

TEST(Submodules, RightIdealsOfT2MatchSubsetClosure) {
  auto t2 = upper_triangular_ring(zmod(2), 2);
  const auto& r = *t2.ring;
  std::set<std::vector<Elem>> oracle;
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (!(mask & 1)) continue;
    bool closed = true;
    for (Elem a = 0; a < 8 && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (Elem b = 0; b < 8; ++b)
        if ((mask >> b & 1) && !(mask >> r.add(a, b) & 1)) closed = false;
      for (Elem b = 0; b < 8; ++b)
        if (!(mask >> r.mul(a, b) & 1)) closed = false;
    }
    if (!closed) continue;
    std::vector<Elem> members;
    for (Elem a = 0; a < 8; ++a)
      if (mask >> a & 1) members.push_back(a);
    oracle.insert(members);
  }
  auto ideals = enumerate_right_ideals(t2.ring, 100);
  std::set<std::vector<Elem>> found;
  for (const auto& i : ideals) found.insert(i.members());
  EXPECT_EQ(found.size(), ideals.size());
  EXPECT_EQ(found, oracle);
  EXPECT_EQ(ideals.size(), 7u);
}

TEST(Submodules, LatticeCap) {
  auto f2 = zmod(2);
  auto m = direct_sum({regular_module(f2), regular_module(f2), regular_module(f2)}).module;
  EXPECT_EQ(enumerate_submodules(m, 1000).size(), 16u);
  EXPECT_THROW(enumerate_submodules(m, 10), CapExceeded);
}

TEST(Submodules, RejectsNonSubmodule) {
  auto r = zmod(4);
  try {
    make_submodule(regular_module(r), {0, r->from_int(1)});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotASubmodule);
  }
}

TEST(Quotients, Basic) {
  auto r = zmod(4);
  auto m = regular_module(r);
  auto q = quotient_module(m, make_submodule(m, {0, r->from_int(2)}));
  EXPECT_EQ(q.module->order(), 2u);
  EXPECT_NO_THROW(q.projection.check_linear());
  EXPECT_EQ(quotient_module(m, whole_submodule(m)).module->order(), 1u);
}

TEST(Quotients, BottomRowByCorner) {
  auto t2 = upper_triangular_ring(zmod(2), 2);
  auto row = t2_bottom_row(t2);
  auto corner = socle(row);
  ASSERT_EQ(corner.size(), 2u);
  auto q = quotient_module(row, corner).module;
  ASSERT_EQ(q->order(), 2u);
  for (Elem a = 0; a < 2; ++a)
    for (Elem b = 0; b < 2; ++b)
      for (Elem c = 0; c < 2; ++c) EXPECT_EQ(q->act(1, t2_elem(t2, a, b, c)), a);
}

TEST(Quotients, HomCountsFactorThroughQuotient) {
  auto t2 = upper_triangular_ring(zmod(2), 2);
  auto r = regular_module(t2.ring);
  std::vector<ModulePtr> targets{r, t2_bottom_row(t2), t2_corner(t2)};
  for (const auto& m : {r, t2_bottom_row(t2)})
    for (const auto& n : enumerate_submodules(m, 100)) {
      auto q = quotient_module(m, n).module;
      for (const auto& x : targets) {
        auto homs = hom_space(m, x);
        EXPECT_EQ(hom_count(q, x), hom_annihilator(homs, n).size());
      }
    }
}

TEST(DirectSums, Orders) {
  auto r = zmod(4);
  auto z2 = cyclic_quotient(r, {0, r->from_int(2)}, "Z/2");
  auto s = direct_sum({regular_module(r), z2});
  EXPECT_EQ(s.module->order(), 8u);
  auto one = direct_sum({z2});
  EXPECT_EQ(one.module->order(), 2u);
  EXPECT_EQ(one.injections[0], identity_hom(z2));
  auto t2 = upper_triangular_ring(zmod(2), 2);
  auto rr = direct_sum({regular_module(t2.ring), regular_module(t2.ring)});
  EXPECT_EQ(rr.module->order(), 64u);
  EXPECT_NO_THROW(check_module_axioms(*rr.module));
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_NO_THROW(rr.injections[i].check_linear());
    EXPECT_NO_THROW(rr.projections[i].check_linear());
    EXPECT_EQ(compose(rr.projections[i], rr.injections[i]), identity_hom(regular_module(t2.ring)));
    EXPECT_TRUE(compose(rr.projections[1 - i], rr.injections[i]).is_zero());
  }
}

TEST(DirectSums, RingMismatch) {
  try {
    direct_sum({regular_module(zmod(4)), regular_module(zmod(2))});
    FAIL();
  } catch (const AlgebraError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
}

TEST(Annihilators, PreimageIdeals) {
  auto r = zmod(4);
  auto m = regular_module(r);
  const Elem two = r->from_int(2);
  auto k = make_submodule(m, {0, two});
  EXPECT_EQ(preimage_ideal(r->from_int(1), k).members(), k.members());
  EXPECT_EQ(preimage_ideal(two, zero_submodule(m)).members(), k.members());
  EXPECT_EQ(element_annihilator(m, two).members(), k.members());
  EXPECT_EQ(module_annihilator(m, k).members(), k.members());
}

TEST(Annihilators, PreimageIdealInT2) {
  auto t2 = upper_triangular_ring(zmod(2), 2);
  auto r = regular_module(t2.ring);
  const Elem e12 = t2_elem(t2, 0, 1, 0);
  auto k = cyclic_submodule(r, e12);
  auto ideal = preimage_ideal(e12, k);
  std::vector<Elem> scan;
  for (Elem x = 0; x < 8; ++x)
    if (k.contains(t2.ring->mul(e12, x))) scan.push_back(x);
  EXPECT_EQ(ideal.members(), scan);
  EXPECT_EQ(ideal.size(), 8u);
}

TEST(Idempotents, Small) {
  auto z4 = zmod(4);
  EXPECT_EQ(idempotents(*z4), (std::vector<Elem>{0, z4->from_int(1)}));
  auto z6 = zmod(6);
  std::vector<Elem> expect{z6->from_int(0), z6->from_int(1), z6->from_int(3), z6->from_int(4)};
  std::sort(expect.begin(), expect.end());
  EXPECT_EQ(idempotents(*z6), expect);
}

TEST(Socle, Examples) {
  auto r = zmod(4);
  EXPECT_EQ(socle(regular_module(r)).size(), 2u);
  auto t2 = upper_triangular_ring(zmod(2), 2);
  EXPECT_EQ(socle(regular_module(t2.ring)).size(), 4u);
}
