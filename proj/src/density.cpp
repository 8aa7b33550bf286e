#include "qhull/density.hpp"

#include <map>

#include "qhull/error.hpp"
#include "qhull/hom.hpp"
#include "qhull/hulls.hpp"

namespace qhull {

namespace {

void require_within(const Submodule& n, const Submodule& v) {
  if (n.ambient() != v.ambient() && !same_module(*n.ambient(), *v.ambient()))
    fail(ErrorKind::NotASubmodule, "submodules of different modules");
  if (!n.subset_of(v)) fail(ErrorKind::NotASubmodule, "N is not contained in V");
}

// x⁻¹N as a sorted list of ring elements.
std::vector<Elem> preimage_members(const RightModule& m, Elem x, const Submodule& n) {
  std::vector<Elem> out;
  for (Elem r = 0; r < m.ring()->order(); ++r)
    if (n.contains(m.act(x, r))) out.push_back(r);
  return out;
}

// Nonzero y among `candidates` with y·D = 0, or 0 when none. D is given by
// additive-and-action generators: y·d = 0 for all generators implies y·D = 0.
Elem killer(const RightModule& k, const std::vector<Elem>& candidates, const std::vector<Elem>& d_gens) {
  for (auto y : candidates) {
    if (y == 0) continue;
    bool kills = true;
    for (auto g : d_gens)
      if (k.act(y, g) != 0) {
        kills = false;
        break;
      }
    if (kills) return y;
  }
  return 0;
}

std::vector<Elem> ideal_generators(const RingPtr& ring, const std::vector<Elem>& members) {
  const auto& r = *ring;
  std::vector<std::uint8_t> in(r.order(), 0);
  std::vector<Elem> span{0}, gens;
  in[0] = 1;
  for (auto x : members) {
    if (in[x]) continue;
    gens.push_back(x);
    std::vector<Elem> cyc;
    for (Elem s = 0; s < r.order(); ++s) cyc.push_back(r.mul(x, s));
    const std::vector<Elem> old = span;
    for (auto a : old)
      for (auto c : cyc) {
        const Elem t = r.add(a, c);
        if (!in[t]) {
          in[t] = 1;
          span.push_back(t);
        }
      }
  }
  return gens;
}

std::vector<Elem> all_elements(const RightModule& k) {
  std::vector<Elem> out(k.order());
  for (Elem i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

void crosscheck(bool primary, bool other, const char* what) {
  if (primary != other) fail(ErrorKind::InternalInconsistency, std::string("density criteria disagree: ") + what);
}

}  // namespace

DensityVerdict essential_in(const Submodule& n, const Submodule& v) {
  require_within(n, v);
  const auto& m = *v.ambient();
  for (auto x : v.members()) {
    if (x == 0) continue;
    bool meets = false;
    for (Elem r = 0; r < m.ring()->order() && !meets; ++r) {
      const Elem y = m.act(x, r);
      meets = y != 0 && n.contains(y);
    }
    if (!meets) return {false, {x}, "definition"};
  }
  return {true, {}, "definition"};
}

DensityVerdict is_essential(const Submodule& n, const ModulePtr& m) {
  require_submodule_of(n, *m);
  return essential_in(n, whole_submodule(n.ambient()));
}

DensityVerdict dense_in(const Submodule& n, const Submodule& v) {
  require_within(n, v);
  const auto& m = *v.ambient();
  std::map<std::vector<Elem>, Elem> seen;
  for (auto x : v.members()) {
    auto d = preimage_members(m, x, n);
    auto it = seen.find(d);
    if (it == seen.end()) {
      const Elem y = killer(m, v.members(), ideal_generators(m.ring(), d));
      it = seen.emplace(std::move(d), y).first;
    }
    if (it->second != 0) return {false, {x, it->second}, "definition"};
  }
  return {true, {}, "definition"};
}

DensityVerdict is_dense(const Submodule& n, const ModulePtr& m, const Context& ctx) {
  require_submodule_of(n, *m);
  auto verdict = dense_in(n, whole_submodule(n.ambient()));
  if (ctx.config.debug_crosscheck) {
    const Context plain = ctx.with_debug(false);
    auto e = injective_hull(n.ambient(), plain).hull;
    crosscheck(verdict.answer, dense_by_quotient_homs(n, e), "Hom(M/N, E(M)) = 0");
    crosscheck(verdict.answer, dense_by_intermediate(n, n.ambient(), ctx.config.max_lattice),
               "Hom(P/N, M) = 0 for N ≤ P ≤ M");
  }
  return verdict;
}

DensityVerdict rel_dense_in(const Submodule& n, const Submodule& v, const ModulePtr& k) {
  require_within(n, v);
  const auto& m = *v.ambient();
  require_same_ring(m, *k);
  const auto ks = all_elements(*k);
  std::map<std::vector<Elem>, Elem> seen;
  for (auto x : v.members()) {
    auto d = preimage_members(m, x, n);
    auto it = seen.find(d);
    if (it == seen.end()) {
      const Elem y = killer(*k, ks, ideal_generators(m.ring(), d));
      it = seen.emplace(std::move(d), y).first;
    }
    if (it->second != 0) return {false, {x, it->second}, "definition"};
  }
  return {true, {}, "definition"};
}

DensityVerdict is_rel_dense(const Submodule& n, const ModulePtr& m, const ModulePtr& k, const Context& ctx) {
  require_submodule_of(n, *m);
  auto verdict = rel_dense_in(n, whole_submodule(n.ambient()), k);
  if (ctx.config.debug_crosscheck) {
    const Context plain = ctx.with_debug(false);
    auto e = injective_hull(k, plain).hull;
    crosscheck(verdict.answer, dense_by_quotient_homs(n, e), "Hom(M/N, E(K)) = 0");
    crosscheck(verdict.answer, dense_by_intermediate(n, k, ctx.config.max_lattice), "Hom(P/N, K) = 0");
    crosscheck(verdict.answer, dense_by_hom_annihilator(n, e, ctx.config.max_hom_maps), "l_H(N) = 0");
  }
  return verdict;
}

DensityVerdict is_ideal_rel_dense(const RightIdeal& i, const ModulePtr& k, const Context& ctx) {
  auto verdict = rel_dense_in(i, whole_submodule(i.ambient()), k);
  if (ctx.config.debug_crosscheck) {
    auto e = injective_hull(k, ctx.with_debug(false)).hull;
    crosscheck(verdict.answer, ideal_dense_by_annihilator(i, e), "l_E(K)(I) = 0");
  }
  return verdict;
}

bool dense_by_quotient_homs(const Submodule& n, const ModulePtr& e) {
  auto q = quotient_module(n.ambient(), n).module;
  return hom_count(q, e) == 1;
}

bool dense_by_intermediate(const Submodule& n, const ModulePtr& k, std::uint64_t lattice_cap) {
  for (const auto& p : enumerate_between(n, whole_submodule(n.ambient()), lattice_cap)) {
    auto sp = submodule_as_module(p, "P");
    std::vector<Elem> inner;
    for (Elem i = 0; i < sp.module->order(); ++i)
      if (n.contains(sp.inclusion(i))) inner.push_back(i);
    auto q = quotient_module(sp.module, Submodule(sp.module, inner), "P/N").module;
    if (hom_count(q, k) != 1) return false;
  }
  return true;
}

bool dense_by_hom_annihilator(const Submodule& n, const ModulePtr& e, std::uint64_t hom_cap) {
  auto homs = hom_space(n.ambient(), e, Context{Config{.max_hom_maps = hom_cap}, nullptr});
  return hom_annihilator(homs, n).size() == 1;
}

bool ideal_dense_by_annihilator(const RightIdeal& i, const ModulePtr& e) {
  if (!same_ring(*i.ambient()->ring(), *e->ring())) fail(ErrorKind::RingMismatch, "ideal and module over different rings");
  return killer(*e, all_elements(*e), submodule_generators(i)) == 0;
}

TwoSidedReport two_sided_density_checks(const RightIdeal& i, const ModulePtr& k, const Context& ctx) {
  if (!is_two_sided(i)) fail(ErrorKind::NotTwoSided, "right ideal is not two-sided");
  const auto gens = submodule_generators(i);
  auto e = injective_hull(k, ctx.with_debug(false)).hull;
  TwoSidedReport out;
  out.lk_zero = killer(*k, all_elements(*k), gens) == 0;
  out.lek_zero = killer(*e, all_elements(*e), gens) == 0;
  out.dense = dense_in(i, whole_submodule(i.ambient())).answer;
  out.lr_zero = killer(*i.ambient(), all_elements(*i.ambient()), gens) == 0;
  return out;
}

}  // namespace qhull
