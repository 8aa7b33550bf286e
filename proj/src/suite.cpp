#include "qhull/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "qhull/error.hpp"
#include "qhull/hulls.hpp"
#include "qhull/quotient_rings.hpp"
#include "qhull/text_format.hpp"

namespace qhull {

namespace {

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string witness;
};

Outcome pass(std::string note = {}) { return {Verdict::Pass, std::move(note)}; }
Outcome failed(std::string witness) { return {Verdict::Fail, std::move(witness)}; }

std::string set_text(const std::vector<Elem>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out + "}";
}
std::string set_text(const Submodule& s) { return set_text(s.members()); }

// Modules of the entry small enough to serve as the K of a relative-density test.
std::vector<ModulePtr> small_modules(const CatalogEntry& entry, std::size_t max_order) {
  std::vector<ModulePtr> out;
  for (const auto& k : entry.modules)
    if (k->order() <= max_order) out.push_back(k);
  return out;
}

bool complete(const ModulePtr& m, const Context& ctx) { return rational_hull(m, ctx).hull->order() == m->order(); }

using ModuleFn = std::function<Outcome(const ModulePtr&, const CatalogEntry&, const Context&)>;
using PairFn = std::function<Outcome(const ModulePtr&, const ModulePtr&, const Context&)>;
using RingFn = std::function<Outcome(const CatalogEntry&, const Context&)>;
using GlobalFn = std::function<Outcome(const Catalog&, const Context&)>;

struct CheckDef {
  std::string name;
  ModuleFn per_module;
  PairFn per_pair;
  RingFn per_ring;
  GlobalFn global;
  std::uint64_t pair_limit = 0;  // largest |M1||M2| for pair checks; 0 = max_module_order
};

// ---- density ---------------------------------------------------------------

Outcome essential_dense_criteria(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto debug = ctx.with_debug(true);
  for (const auto& n : enumerate_submodules(m, ctx.config.max_lattice)) {
    const auto d = is_dense(n, m, debug);
    if (d.answer && !is_essential(n, m).answer) return failed("dense but not essential: N=" + set_text(n));
    if (!d.answer) {
      const Elem x = d.witness.at(0), y = d.witness.at(1);
      for (Elem r = 0; r < m->ring()->order(); ++r)
        if (n.contains(m->act(x, r)) && m->act(y, r) != 0)
          return failed("density witness does not replay: N=" + set_text(n));
    }
  }
  return pass();
}

Outcome relative_density_criteria(const ModulePtr& m, const CatalogEntry& entry, const Context& ctx) {
  const auto debug = ctx.with_debug(true);
  const auto ks = small_modules(entry, 16);
  for (const auto& n : enumerate_submodules(m, ctx.config.max_lattice)) {
    if (is_rel_dense(n, m, m, debug).answer != is_dense(n, m).answer)
      return failed("M-density differs from density: N=" + set_text(n));
    for (const auto& k : ks) is_rel_dense(n, m, k, debug);
  }
  return pass();
}

Outcome dense_intersection(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  std::vector<Submodule> dense;
  for (const auto& n : enumerate_submodules(m, ctx.config.max_lattice))
    if (is_dense(n, m).answer) dense.push_back(n);
  for (std::size_t i = 0; i < dense.size(); ++i)
    for (std::size_t j = i + 1; j < dense.size(); ++j)
      if (!is_dense(submodule_intersection(dense[i], dense[j]), m).answer)
        return failed("L=" + set_text(dense[i]) + " N=" + set_text(dense[j]));
  return pass();
}

Outcome dense_transitivity(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto subs = enumerate_submodules(m, ctx.config.max_lattice);
  const auto whole = whole_submodule(m);
  std::vector<bool> dense(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) dense[i] = dense_in(subs[i], whole).answer;
  for (std::size_t l = 0; l < subs.size(); ++l)
    for (std::size_t v = 0; v < subs.size(); ++v) {
      if (!subs[l].subset_of(subs[v])) continue;
      if (dense[l] != (dense_in(subs[l], subs[v]).answer && dense[v]))
        return failed("L=" + set_text(subs[l]) + " V=" + set_text(subs[v]));
    }
  return pass();
}

Outcome relative_density_sums(const ModulePtr& m, const CatalogEntry& entry, const Context& ctx) {
  const auto ks = small_modules(entry, 8);
  const auto subs = enumerate_submodules(m, ctx.config.max_lattice);
  const auto whole = whole_submodule(m);
  std::vector<ModulePtr> hulls;
  for (const auto& k : ks) hulls.push_back(rational_hull(k, ctx).hull);
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i; j < ks.size(); ++j) {
      const auto sum = direct_sum({ks[i], ks[j]}).module;
      const auto hull_sum = direct_sum({hulls[i], hulls[j]}).module;
      for (const auto& n : subs) {
        const bool each = rel_dense_in(n, whole, ks[i]).answer && rel_dense_in(n, whole, ks[j]).answer;
        const bool in_sum = rel_dense_in(n, whole, sum).answer;
        const bool in_hulls = rel_dense_in(n, whole, hull_sum).answer;
        if (each != in_sum || each != in_hulls)
          return failed("N=" + set_text(n) + " K1=" + ks[i]->label() + " K2=" + ks[j]->label());
      }
    }
  return pass();
}

Outcome dense_direct_sum(const ModulePtr& a, const ModulePtr& b, const Context& ctx) {
  const auto sum = direct_sum({a, b});
  const auto subs_a = enumerate_submodules(a, ctx.config.max_lattice);
  const auto subs_b = enumerate_submodules(b, ctx.config.max_lattice);
  const auto wa = whole_submodule(a), wb = whole_submodule(b);
  for (const auto& na : subs_a) {
    const bool a_ok = rel_dense_in(na, wa, a).answer && rel_dense_in(na, wa, b).answer;
    for (const auto& nb : subs_b) {
      const bool b_ok = rel_dense_in(nb, wb, a).answer && rel_dense_in(nb, wb, b).answer;
      std::vector<Elem> gens;
      for (auto g : submodule_generators(na)) gens.push_back(sum.injections[0](g));
      for (auto g : submodule_generators(nb)) gens.push_back(sum.injections[1](g));
      const auto n = submodule_generated(sum.module, gens);
      if (dense_in(n, whole_submodule(sum.module)).answer != (a_ok && b_ok))
        return failed("N1=" + set_text(na) + " N2=" + set_text(nb));
    }
  }
  return pass();
}

Outcome two_sided_density(const CatalogEntry& entry, const Context& ctx) {
  for (const auto& i : enumerate_right_ideals(entry.ring, ctx.config.max_lattice)) {
    for (const auto& k : entry.modules) {
      if (!is_two_sided(i)) {
        try {
          two_sided_density_checks(i, k, ctx);
          return failed("one-sided ideal accepted: I=" + set_text(i));
        } catch (const AlgebraError& e) {
          if (e.kind() != ErrorKind::NotTwoSided) throw;
        }
        break;
      }
      if (!two_sided_density_checks(i, k, ctx).consistent())
        return failed("I=" + set_text(i) + " K=" + k->label());
    }
  }
  return pass();
}

Outcome ideal_relative_density(const CatalogEntry& entry, const Context& ctx) {
  const auto debug = ctx.with_debug(true);
  const auto r = regular_module(entry.ring);
  for (const auto& i : enumerate_right_ideals(entry.ring, ctx.config.max_lattice))
    for (const auto& k : entry.modules)
      if (is_ideal_rel_dense(i, k, debug).answer != is_rel_dense(i, r, k).answer)
        return failed("I=" + set_text(i) + " K=" + k->label());
  return pass();
}

Outcome dense_essential_separation(const Catalog& catalog, const Context& ctx) {
  for (const auto& e : catalog.entries)
    for (const auto& m : e.modules)
      for (const auto& n : enumerate_submodules(m, ctx.config.max_lattice))
        if (is_essential(n, m).answer && !is_dense(n, m).answer)
          return pass("essential, not dense: " + instance_id(*m) + " N=" + set_text(n));
  return {Verdict::Skipped, "catalog has no essential submodule that is not dense"};
}

Outcome relative_density_separation(const Catalog& catalog, const Context& ctx) {
  for (const auto& e : catalog.entries)
    for (const auto& m : e.modules)
      for (const auto& n : enumerate_submodules(m, ctx.config.max_lattice)) {
        if (is_essential(n, m).answer) continue;
        for (const auto& k : e.modules)
          if (k->order() > 1 && is_rel_dense(n, m, k).answer)
            return pass("K-dense, not essential: " + instance_id(*m) + " N=" + set_text(n) + " K=" + k->label());
      }
  return {Verdict::Skipped, "catalog has no relatively dense submodule that is not essential"};
}

// ---- hulls -----------------------------------------------------------------

Outcome rational_hull_formulas(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto img = injective_hull(m, ctx).image();
  const auto expected = rational_hull_within(img);
  for (auto f : all_rational_formulas()) {
    const auto got = rational_hull_by(f, img, ctx);
    if (!(got == expected)) return failed(std::string(formula_name(f)) + " gives " + set_text(got) + " vs " + set_text(expected));
  }
  const auto fixed = rational_hull_by_fixed_points(img, ctx);
  if (!(fixed == expected)) return failed("fixed points " + set_text(fixed) + " vs " + set_text(expected));
  return pass();
}

Outcome hull_sandwich(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto e = injective_hull(m, ctx);
  const auto img = e.image();
  const auto rat = rational_hull_within(img);
  if (!e.embedding.is_injective()) return failed("embedding into E(M) not injective");
  if (!img.subset_of(rat)) return failed("M not inside the rational hull");
  if (!essential_in(img, whole_submodule(e.hull)).answer) return failed("M not essential in E(M)");
  if (!dense_in(img, rat).answer) return failed("M not dense in its rational hull");
  if (!is_injective(e.hull, ctx)) return failed("E(M) fails Baer");
  if (is_injective(m, ctx) != e.embedding.is_surjective()) return failed("injectivity and hull size disagree");
  const auto r = rational_hull(m, ctx);
  if (!complete(r.hull, ctx)) return failed("rational hull not rationally complete");
  return pass();
}

Outcome hull_idempotence(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto e = injective_hull(m, ctx).hull;
  const auto ee = injective_hull(e, ctx);
  if (!ee.embedding.is_surjective()) return failed("E(E(M)) larger than E(M)");
  const auto r = rational_hull(m, ctx).hull;
  if (!rational_hull(r, ctx).embedding.is_surjective()) return failed("rational hull of the rational hull grows");
  return pass();
}

Outcome intermediate_density(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto e = injective_hull(m, ctx);
  if (e.hull->order() > 64) return {Verdict::Skipped, "|E(M)| > 64"};
  const auto img = e.image();
  const auto rat = rational_hull_within(img);
  for (const auto& v : enumerate_between(img, whole_submodule(e.hull), ctx.config.max_lattice))
    if (dense_in(img, v).answer != v.subset_of(rat)) return failed("V=" + set_text(v));
  return pass();
}

Outcome maximal_dense_minimal_complete(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto e = injective_hull(m, ctx);
  if (e.hull->order() > 64) return {Verdict::Skipped, "|E(M)| > 64"};
  const auto img = e.image();
  const auto rat = rational_hull_within(img);
  if (!dense_in(img, rat).answer) return failed("M not dense in the rational hull");
  if (!complete(submodule_as_module(rat, "F").module, ctx)) return failed("rational hull not complete");
  for (const auto& v : enumerate_between(img, whole_submodule(e.hull), ctx.config.max_lattice)) {
    if (rat.subset_of(v) && !(v == rat) && dense_in(img, v).answer) return failed("larger dense V=" + set_text(v));
    if (v.subset_of(rat) && !(v == rat) && complete(submodule_as_module(v, "V").module, ctx))
      return failed("smaller complete V=" + set_text(v));
  }
  return pass();
}

Outcome rational_completeness_criteria(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const bool a = complete(m, ctx);
  const bool b = rationally_complete_by_cosets(m, ctx);
  const bool c = rationally_complete_by_extension(m, ctx);
  if (a != b || a != c)
    return failed("hull=" + std::to_string(a) + " cosets=" + std::to_string(b) + " extension=" + std::to_string(c));
  return pass();
}

Outcome unique_extension(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto whole = whole_submodule(m);
  for (const auto& n : enumerate_submodules(m, ctx.config.max_lattice)) {
    const auto sm = submodule_as_module(n, "N");
    const std::vector<std::pair<ModuleHom, const char*>> maps{
        {identity_hom(sm.module), "identity of N"},
        {sm.inclusion, "inclusion N -> M"},
        {zero_hom(sm.module, m), "zero N -> M"}};
    for (const auto& [phi, what] : maps) {
      const bool dense = rel_dense_in(n, whole, phi.target()).answer;
      if (!dense) {
        try {
          extend_hom(sm, phi, ctx);
          return failed(std::string("extension accepted without density: ") + what + " N=" + set_text(n));
        } catch (const AlgebraError& err) {
          if (err.kind() != ErrorKind::PreconditionFailed) throw;
        }
        continue;
      }
      const auto ext = extend_hom(sm, phi, ctx);
      for (Elem i = 0; i < sm.module->order(); ++i)
        if (ext.map(sm.inclusion(i)) != ext.k_hull.embedding(phi(i)))
          return failed(std::string("extension does not restrict: ") + what + " N=" + set_text(n));
      if (!ext.image_dense) return failed(std::string("image of N not dense in image of M: ") + what + " N=" + set_text(n));
    }
  }
  return pass();
}

Outcome jacobson_annihilator(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto t = end_of_hull(m, ctx);
  const auto e = t.t.base;
  std::vector<ModuleHom> j;
  for (auto a : t.jacobson) j.push_back(t.t.homs[a]);
  const auto killed = common_kernel(e, j);
  const auto inj = injective_hull(m, ctx);
  const auto rat = rational_hull_within(inj.image());
  if (!killed.subset_of(rat)) return failed("r(J(T))=" + set_text(killed) + " rational hull=" + set_text(rat));
  for (Elem a = 0; a < t.t.homs.size(); ++a) {
    const bool in_j = std::binary_search(t.jacobson.begin(), t.jacobson.end(), a);
    if (in_j != essential_in(kernel(t.t.homs[a]), whole_submodule(e)).answer) return failed("J(T) membership of " + std::to_string(a));
  }
  return pass();
}

Outcome hull_transfer(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto r = rational_hull(m, ctx).hull;
  if (is_quasi_injective(m, ctx) && !is_quasi_injective(r, ctx)) return failed("quasi-injectivity lost");
  if (is_quasi_continuous(m, ctx) && !is_quasi_continuous(r, ctx)) return failed("quasi-continuity lost");
  if (is_extending(m, ctx) && !is_extending(r, ctx)) return failed("extending lost");
  if (is_polyform(m, ctx) != (is_polyform(r, ctx) && is_quasi_injective(r, ctx)))
    return failed("polyform differs from: hull polyform and quasi-injective");
  const auto q = quasi_injective_hull(m, ctx);
  if (!is_quasi_injective(q.hull, ctx)) return failed("quasi-injective hull is not quasi-injective");
  return pass();
}

Outcome direct_sum_hull(const ModulePtr& a, const ModulePtr& b, const Context& ctx) {
  const auto rep = direct_sum_hull_check({a, b}, ctx);
  if (!rep.contained) return failed("hull of the sum not inside the sum of hulls");
  if (!rep.biconditional_holds)
    return failed("equal=" + std::to_string(rep.equal) + " pairwise=" + std::to_string(rep.all_pairwise));
  if (a == b && !rep.equal) return failed("hull of M+M differs from the square of the hull");
  if (complete(a, ctx) && complete(b, ctx) && rep.sum_hull_order != a->order() * b->order())
    return failed("sum of complete modules not complete");
  return pass(rep.equal ? "equal" : "proper");
}

// ---- quotient rings ----------------------------------------------------------

Outcome omega_embedding(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto om = omega(m, ctx.with_debug(true));
  for (Elem f = 0; f < om.end_m.homs.size(); ++f)
    for (Elem x = 0; x < m->order(); ++x)
      if (om.end_hull.homs[om.omega(f)](om.hull.embedding(x)) != om.hull.embedding(om.end_m.homs[f](x)))
        return failed("Omega(" + std::to_string(f) + ") does not restrict at " + std::to_string(x));
  return pass(om.surjective ? "onto" : "proper");
}

Outcome omega_isomorphism(const ModulePtr& m, const CatalogEntry&, const Context& ctx) {
  const auto rep = quasi_injective_omega_check(m, ctx);
  if (!rep.holds()) return failed(rep.violations.front());
  return pass();
}

Outcome quotient_ring(const CatalogEntry& entry, const Context& ctx) {
  const auto q = q_max(entry.ring, ctx);
  const auto rq = is_right_ring_of_quotients(q.embedding);
  if (!rq.answer) return failed("R -> Q(R) not a ring of quotients at " + set_text(rq.witness));
  const auto qq = q_max(q.q, ctx);
  if (qq.q->order() != q.q->order()) return failed("Q(Q(R)) larger than Q(R)");
  const auto h = as_right_module(q.embedding, "Q_R");
  std::vector<Elem> r_members = q.embedding.map;
  std::sort(r_members.begin(), r_members.end());
  const auto e = injective_hull(regular_module(entry.ring), ctx).hull;
  if (!rel_dense_in(Submodule(h, r_members), whole_submodule(h), e).answer) return failed("R not E(R)-dense in Q(R)");
  if (is_simple_ring(entry.ring, ctx) && !is_simple_ring(q.q, ctx)) return failed("Q of a simple ring is not simple");
  return pass("|Q|=" + std::to_string(q.q->order()));
}

Outcome endomorphism_transfer(const CatalogEntry& entry, const Context& ctx) {
  const auto q = q_max(entry.ring, ctx);
  const auto h = regular_module(q.q);
  std::vector<ModulePtr> ms{h};
  if (h->order() * h->order() <= ctx.config.max_module_order) ms.push_back(direct_sum({h, h}).module);
  if (q.embedding.is_surjective())
    for (const auto& m : entry.modules) ms.push_back(m);
  for (const auto& m : ms) {
    ModulePtr over_q = m;
    if (!same_ring(*m->ring(), *q.q)) {
      // R = Q(R) up to the relabeling of the embedding.
      std::vector<Elem> back(q.q->order());
      for (Elem r = 0; r < entry.ring->order(); ++r) back[q.embedding(r)] = r;
      over_q = restrict_scalars(m, q.q, back, m->label());
    }
    const auto rep = end_transfer_check(over_q, q.embedding, ctx);
    if (!rep.holds()) return failed(m->label() + ": " + rep.violations.front());
  }
  return pass();
}

Outcome matrix_quotient(const Catalog&, const Context& ctx) {
  struct Case {
    RingPtr r;
    std::size_t n, k;
  };
  const std::vector<Case> cases{{upper_triangular_ring(galois_field(2), 2).ring, 1, 1}, {zmod(4), 1, 2}, {galois_field(2), 2, 1}};
  std::string note;
  for (const auto& c : cases) {
    const auto rep = matrix_quotient_check(c.r, c.n, c.k, ctx);
    const auto id = c.r->name() + " n=" + std::to_string(c.n) + " k=" + std::to_string(c.k);
    if (!rep.holds()) return failed(id);
    note += (note.empty() ? "" : "; ") + id + " |End|=" + std::to_string(rep.end_order);
  }
  return pass(note);
}

Outcome singular_simples(const CatalogEntry& entry, const Context& ctx) {
  const auto rep = singular_simple_check(entry.ring, entry.modules, ctx);
  if (!rep.holds()) return failed(rep.violations.front());
  return pass(std::to_string(rep.singular.size()) + " singular simple(s), |P|=" + std::to_string(rep.p->order()));
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks{
      {"essential_dense_criteria", essential_dense_criteria, {}, {}, {}},
      {"relative_density_criteria", relative_density_criteria, {}, {}, {}},
      {"dense_intersection", dense_intersection, {}, {}, {}},
      {"dense_transitivity", dense_transitivity, {}, {}, {}},
      {"relative_density_sums", relative_density_sums, {}, {}, {}},
      {"dense_direct_sum", {}, dense_direct_sum, {}, {}, 64},
      {"two_sided_density", {}, {}, two_sided_density, {}},
      {"ideal_relative_density", {}, {}, ideal_relative_density, {}},
      {"dense_essential_separation", {}, {}, {}, dense_essential_separation},
      {"relative_density_separation", {}, {}, {}, relative_density_separation},
      {"rational_hull_formulas", rational_hull_formulas, {}, {}, {}},
      {"hull_sandwich", hull_sandwich, {}, {}, {}},
      {"hull_idempotence", hull_idempotence, {}, {}, {}},
      {"intermediate_density", intermediate_density, {}, {}, {}},
      {"maximal_dense_minimal_complete", maximal_dense_minimal_complete, {}, {}, {}},
      {"rational_completeness_criteria", rational_completeness_criteria, {}, {}, {}},
      {"unique_extension", unique_extension, {}, {}, {}},
      {"jacobson_annihilator", jacobson_annihilator, {}, {}, {}},
      {"hull_transfer", hull_transfer, {}, {}, {}},
      {"direct_sum_hull", {}, direct_sum_hull, {}, {}},
      {"omega_embedding", omega_embedding, {}, {}, {}},
      {"omega_isomorphism", omega_isomorphism, {}, {}, {}},
      {"quotient_ring", {}, {}, quotient_ring, {}},
      {"endomorphism_transfer", {}, {}, endomorphism_transfer, {}},
      {"matrix_quotient", {}, {}, {}, matrix_quotient},
      {"singular_simples", {}, {}, singular_simples, {}},
  };
  return checks;
}

struct Task {
  std::string name;
  std::string instance;
  std::function<Outcome(const Context&)> run;
};

std::vector<Task> expand(const CheckDef& def, const Catalog& catalog, const Config& config) {
  const std::uint64_t pair_limit = def.pair_limit ? def.pair_limit : config.max_module_order;
  std::vector<Task> tasks;
  if (def.per_module)
    for (const auto& e : catalog.entries)
      for (const auto& m : e.modules)
        tasks.push_back({def.name, instance_id(*m), [&def, &e, m](const Context& c) { return def.per_module(m, e, c); }});
  if (def.per_pair)
    for (const auto& e : catalog.entries)
      for (std::size_t i = 0; i < e.modules.size(); ++i)
        for (std::size_t j = i; j < e.modules.size(); ++j) {
          const auto a = e.modules[i], b = e.modules[j];
          if (a->order() * b->order() > pair_limit) continue;
          tasks.push_back({def.name, e.ring->name() + " :: " + a->label() + " (+) " + b->label(),
                           [&def, a, b](const Context& c) { return def.per_pair(a, b, c); }});
        }
  if (def.per_ring)
    for (const auto& e : catalog.entries)
      tasks.push_back({def.name, e.ring->name(), [&def, &e](const Context& c) { return def.per_ring(e, c); }});
  if (def.global && !catalog.entries.empty())
    tasks.push_back({def.name, "catalog", [&def, &catalog](const Context& c) { return def.global(catalog, c); }});
  return tasks;
}

CheckRecord execute(const Task& task, const Context& ctx, bool timings) {
  CheckRecord rec{task.name, task.instance, Verdict::Pass, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto out = task.run(ctx);
    rec.verdict = out.verdict;
    rec.witness = out.witness;
  } catch (const CapExceeded& e) {
    rec.verdict = Verdict::Skipped;
    rec.witness = e.what();
  } catch (const std::exception& e) {
    rec.verdict = Verdict::Fail;
    rec.witness = e.what();
  }
  if (timings)
    rec.millis = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return rec;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : registry()) out.push_back(c.name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(const Catalog& catalog, const SuiteOptions& options, const Context& ctx) {
  std::vector<const CheckDef*> selected;
  if (options.checks.empty()) {
    for (const auto& c : registry()) selected.push_back(&c);
  } else {
    for (const auto& name : options.checks) {
      auto it = std::find_if(registry().begin(), registry().end(), [&](const CheckDef& c) { return c.name == name; });
      if (it == registry().end()) fail(ErrorKind::UnknownCheck, "unknown check '" + name + "'");
      selected.push_back(&*it);
    }
  }
  SuiteReport report{ctx.config, options, {}, 0, 0, 0};
  for (const auto& id : catalog.trimmed)
    report.records.push_back({"catalog", id, Verdict::Skipped, "module order exceeds max_module_order", 0});

  std::vector<Task> tasks;
  for (const auto* def : selected)
    for (auto& t : expand(*def, catalog, ctx.config)) tasks.push_back(std::move(t));
  std::vector<CheckRecord> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = execute(tasks[i], ctx, options.timings);
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (auto& r : results) report.records.push_back(std::move(r));
  for (const auto& r : report.records) {
    if (r.verdict == Verdict::Pass) ++report.pass;
    if (r.verdict == Verdict::Fail) ++report.fail;
    if (r.verdict == Verdict::Skipped) ++report.skipped;
  }
  return report;
}

std::string report_json(const SuiteReport& report) {
  using json = nlohmann::ordered_json;
  const auto& c = report.config;
  json config{{"max_module_order", c.max_module_order},
              {"max_hom_maps", c.max_hom_maps},
              {"exhaustive_hom_cap", c.exhaustive_hom_cap},
              {"max_lattice", c.max_lattice},
              {"max_end_ring", c.max_end_ring},
              {"debug_crosscheck", c.debug_crosscheck},
              {"seed", 0},
              {"catalog", report.options.catalog_name},
              {"checks", report.options.checks.empty() ? check_names() : report.options.checks},
              {"timings", report.options.timings}};
  json checks = json::array();
  for (const auto& r : report.records) {
    json rec{{"name", r.name}, {"instance", r.instance}, {"verdict", verdict_name(r.verdict)}};
    if (!r.witness.empty()) rec["witness"] = r.witness;
    rec["millis"] = r.millis;
    checks.push_back(std::move(rec));
  }
  json out{{"config", std::move(config)},
           {"checks", std::move(checks)},
           {"summary", {{"pass", report.pass}, {"fail", report.fail}, {"skipped", report.skipped}}}};
  return out.dump(2) + "\n";
}

std::string report_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& r : report.records) {
    out << (r.verdict == Verdict::Pass ? "PASS" : r.verdict == Verdict::Fail ? "FAIL" : "SKIP") << "  " << r.name << "  "
        << r.instance;
    if (report.options.timings) out << "  (" << r.millis << " ms)";
    if (!r.witness.empty()) out << "\n      " << r.witness;
    out << "\n";
  }
  out << report.pass << " passed, " << report.fail << " failed, " << report.skipped << " skipped\n";
  return out.str();
}

std::vector<ContinuityRecord> search_continuous_transfer(const Catalog& catalog, const Context& ctx) {
  std::vector<ContinuityRecord> out;
  for (const auto& e : catalog.entries)
    for (const auto& m : e.modules) {
      ContinuityRecord rec{instance_id(*m), Verdict::Pass, false, std::nullopt, {}};
      try {
        rec.continuous = is_continuous(m, ctx);
        if (rec.continuous) {
          const auto h = rational_hull(m, ctx);
          rec.hull_continuous = is_continuous(h.hull, ctx);
          if (!*rec.hull_continuous) {
            rec.verdict = Verdict::Fail;
            rec.witness = write_module(*m) + write_hull(h);
          }
        }
      } catch (const CapExceeded& err) {
        rec.verdict = Verdict::Skipped;
        rec.witness = err.what();
      }
      out.push_back(std::move(rec));
    }
  return out;
}

namespace {

bool embeds_into(const ModulePtr& a, const ModulePtr& b, const Context& ctx) {
  if (a->order() > b->order()) return false;
  const auto space = hom_group(a, b);
  if (space.size() > ctx.config.max_hom_maps) throw CapExceeded("Hom(P, M) enumeration", ctx.config.max_hom_maps);
  for (std::uint64_t i = 0; i < space.size(); ++i)
    if (space.at(i).is_injective()) return true;
  return false;
}

}  // namespace

SingularSimpleReport singular_simple_check(const RingPtr& r, const std::vector<ModulePtr>& modules, const Context& ctx) {
  SingularSimpleReport rep;
  const auto reg = regular_module(r);
  const auto ideals = enumerate_right_ideals(r, ctx.config.max_lattice);
  for (const auto& i : ideals) {
    if (i.is_whole()) continue;
    bool maximal = true;
    for (const auto& j : ideals)
      if (!j.is_whole() && !(j == i) && i.subset_of(j)) maximal = false;
    if (!maximal) continue;
    const auto s = quotient_module(reg, i, "R/" + set_text(i)).module;
    bool seen = false;
    for (const auto& t : rep.simples)
      if (t->order() == s->order() && embeds_into(s, t, ctx)) seen = true;
    if (seen) continue;
    rep.simples.push_back(s);
    if (singular_submodule(s).size() == s->order()) rep.singular.push_back(s);
  }
  rep.p = rep.singular.empty() ? quotient_module(reg, whole_submodule(reg), "0").module
                               : direct_sum(rep.singular, "P").module;
  rep.p_complete = complete(rep.p, ctx);
  if (!rep.p_complete) rep.violations.push_back("sum of singular simples is not rationally complete");
  for (const auto& m : modules) {
    if (!embeds_into(rep.p, m, ctx)) continue;
    rep.containing.push_back(m->label());
    if (!complete(m, ctx)) rep.violations.push_back(m->label() + " contains P but is not rationally complete");
  }
  return rep;
}

}  // namespace qhull
