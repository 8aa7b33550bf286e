#include "qhull/quotient_rings.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "qhull/error.hpp"

namespace qhull {

namespace {

std::string pair_text(Elem a, Elem b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

std::vector<Elem> inverse_table(const RingEmbedding& emb) {
  std::vector<Elem> inv(emb.target->order(), static_cast<Elem>(-1));
  for (Elem r = 0; r < emb.source->order(); ++r) inv[emb(r)] = r;
  return inv;
}

// Generators of the right ideal {r : test(r)} of R.
std::vector<Elem> ideal_generators_where(const RingPtr& r, const std::function<bool(Elem)>& test) {
  std::vector<Elem> members;
  for (Elem s = 0; s < r->order(); ++s)
    if (test(s)) members.push_back(s);
  return submodule_generators(Submodule(regular_module(r), std::move(members)));
}

}  // namespace

bool RingEmbedding::is_surjective() const { return source->order() == target->order(); }

RingEmbedding make_ring_embedding(RingPtr source, RingPtr target, std::vector<Elem> map) {
  if (map.size() != source->order()) fail(ErrorKind::ShapeMismatch, "ring map size");
  const auto& s = *source;
  const auto& t = *target;
  if (map[s.one()] != t.one()) fail(ErrorKind::InternalInconsistency, "ring map does not preserve 1");
  std::vector<std::uint8_t> hit(t.order(), 0);
  for (Elem a = 0; a < s.order(); ++a) {
    if (hit[map[a]]++) fail(ErrorKind::InternalInconsistency, "ring map not injective at " + std::to_string(a));
    for (Elem b = 0; b < s.order(); ++b) {
      if (map[s.add(a, b)] != t.add(map[a], map[b]))
        fail(ErrorKind::InternalInconsistency, "ring map not additive at " + pair_text(a, b));
      if (map[s.mul(a, b)] != t.mul(map[a], map[b]))
        fail(ErrorKind::InternalInconsistency, "ring map not multiplicative at " + pair_text(a, b));
    }
  }
  return {std::move(source), std::move(target), std::move(map)};
}

RingEmbedding identity_embedding(const RingPtr& r) {
  std::vector<Elem> id(r->order());
  for (Elem i = 0; i < id.size(); ++i) id[i] = i;
  return {r, r, std::move(id)};
}

ModulePtr as_right_module(const RingEmbedding& emb, std::string label) {
  return restrict_scalars(regular_module(emb.target), emb.source, emb.map, std::move(label));
}

QuotientRingResult q_max(const RingPtr& r, const Context& ctx) {
  const auto reg = regular_module(r);
  const auto inj = injective_hull(reg, ctx);
  const auto& e = inj.hull;
  const auto img = inj.image();
  const auto qset = rational_hull_within(img);
  for (auto f : {RationalFormula::RelativeDensity, RationalFormula::IdealAnnihilator, RationalFormula::QuotientHoms,
                 RationalFormula::Annihilator})
    if (!(rational_hull_by(f, img, ctx) == qset))
      fail(ErrorKind::InternalInconsistency, std::string("Q(R) characterizations disagree: ") + formula_name(f));

  std::vector<Elem> of_e(e->order(), static_cast<Elem>(-1));  // E element → R element
  for (Elem s = 0; s < r->order(); ++s) of_e[inj.embedding(s)] = s;
  const auto& members = qset.members();
  std::vector<Elem> pos(e->order(), static_cast<Elem>(-1));
  for (Elem i = 0; i < members.size(); ++i) pos[members[i]] = i;

  // For q₂: generators d of q₂⁻¹R and the R-elements q₂·d.
  std::vector<std::vector<std::pair<Elem, Elem>>> dens(members.size());
  for (Elem j = 0; j < members.size(); ++j) {
    const Elem q2 = members[j];
    for (auto d : ideal_generators_where(r, [&](Elem s) { return img.contains(e->act(q2, s)); }))
      dens[j].emplace_back(d, of_e[e->act(q2, d)]);
  }
  const std::size_t n = members.size();
  std::vector<Elem> product(n * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      const Elem q1 = members[i];
      Elem found = 0;
      std::size_t count = 0;
      for (Elem x = 0; x < e->order(); ++x) {
        bool ok = true;
        for (auto [d, s] : dens[j])
          if (e->act(x, d) != e->act(q1, s)) {
            ok = false;
            break;
          }
        if (ok) {
          found = x;
          ++count;
        }
      }
      if (count == 0) fail(ErrorKind::NoProduct, "no product for " + pair_text(q1, members[j]));
      if (count > 1) fail(ErrorKind::NonUniqueProduct, "several products for " + pair_text(q1, members[j]));
      if (!qset.contains(found)) fail(ErrorKind::InternalInconsistency, "product leaves the rational hull");
      product[i * n + j] = pos[found];
    }

  auto built = ring_from_operations(
      "Q(" + r->name() + ")", n, [&](Elem a, Elem b) { return pos[e->add(members[a], members[b])]; },
      [&](Elem a, Elem b) { return product[a * n + b]; }, pos[inj.embedding(r->one())]);
  check_ring_axioms(*built.ring);

  std::vector<Elem> emb_map(r->order());
  for (Elem s = 0; s < r->order(); ++s) emb_map[s] = built.from_label[pos[inj.embedding(s)]];
  auto emb = make_ring_embedding(r, built.ring, std::move(emb_map));

  auto sm = submodule_as_module(qset, "~E(" + reg->label() + ")");
  std::vector<Elem> into_hull(r->order()), ident(sm.module->order());
  for (Elem i = 0; i < sm.module->order(); ++i) {
    const Elem x = sm.inclusion(i);
    ident[i] = built.from_label[pos[x]];
    if (of_e[x] != static_cast<Elem>(-1)) into_hull[of_e[x]] = i;
  }
  HullResult hull{sm.module, ModuleHom(reg, sm.module, std::move(into_hull)), HullKind::Rational};
  ModuleHom identification(sm.module, as_right_module(emb, "Q_R"), std::move(ident));
  identification.check_linear();
  return {built.ring, std::move(emb), std::move(hull), std::move(identification)};
}

DensityVerdict is_right_ring_of_quotients(const RingEmbedding& emb) {
  const auto& h = *emb.target;
  const auto inv = inverse_table(emb);
  for (Elem x = 1; x < h.order(); ++x)
    for (Elem y = 0; y < h.order(); ++y) {
      bool found = false;
      for (Elem r = 0; r < emb.source->order() && !found; ++r)
        found = h.mul(x, emb(r)) != 0 && inv[h.mul(y, emb(r))] != static_cast<Elem>(-1);
      if (!found) return {false, {x, y}, "definition"};
    }
  return {true, {}, "definition"};
}

std::optional<RingEmbedding> identify_quotient_ring(const QuotientRingResult& q, const RingEmbedding& into) {
  if (!same_ring(*q.embedding.source, *into.source)) fail(ErrorKind::RingMismatch, "embeddings start at different rings");
  const auto& qr = *q.q;
  const auto& h = *into.target;
  const auto r = into.source;
  const auto inv = inverse_table(q.embedding);
  std::vector<Elem> psi(qr.order());
  for (Elem x = 0; x < qr.order(); ++x) {
    std::vector<std::pair<Elem, Elem>> constraints;
    for (auto d : ideal_generators_where(r, [&](Elem s) { return inv[qr.mul(x, q.embedding(s))] != static_cast<Elem>(-1); }))
      constraints.emplace_back(into(d), into(inv[qr.mul(x, q.embedding(d))]));
    std::size_t count = 0;
    for (Elem y = 0; y < h.order(); ++y) {
      bool ok = true;
      for (auto [d, target] : constraints)
        if (h.mul(y, d) != target) {
          ok = false;
          break;
        }
      if (ok) {
        psi[x] = y;
        ++count;
      }
    }
    if (count != 1) return std::nullopt;
  }
  if (qr.order() != h.order()) return std::nullopt;
  try {
    return make_ring_embedding(q.q, into.target, std::move(psi));
  } catch (const AlgebraError&) {
    return std::nullopt;
  }
}

bool is_simple_ring(const RingPtr& r, const Context& ctx) {
  std::size_t two_sided = 0;
  for (const auto& i : enumerate_right_ideals(r, ctx.config.max_lattice))
    if (is_two_sided(i)) ++two_sided;
  return two_sided == 2;
}

OmegaResult omega(const ModulePtr& m, const Context& ctx) {
  auto hull = rational_hull(m, ctx);
  auto end_m = end_ring(m, ctx);
  auto end_hull = end_ring(hull.hull, ctx);
  const auto& g = m->group();
  std::unordered_map<std::vector<Elem>, Elem, VectorHash> by_restriction;
  std::vector<Elem> key(g.rank());
  for (Elem t = 0; t < end_hull.homs.size(); ++t) {
    for (std::size_t k = 0; k < g.rank(); ++k) key[k] = end_hull.homs[t](hull.embedding(g.generator(k)));
    if (!by_restriction.emplace(key, t).second)
      fail(ErrorKind::NonUnique, "two endomorphisms of the rational hull agree on M");
  }
  std::vector<Elem> map(end_m.homs.size());
  for (Elem f = 0; f < end_m.homs.size(); ++f) {
    for (std::size_t k = 0; k < g.rank(); ++k) key[k] = hull.embedding(end_m.homs[f](g.generator(k)));
    auto it = by_restriction.find(key);
    if (it == by_restriction.end()) fail(ErrorKind::NotFound, "endomorphism of M does not extend");
    map[f] = it->second;
  }
  if (ctx.config.debug_crosscheck) {
    const auto n = submodule_as_module(hull.image(), "M");
    std::vector<Elem> back(hull.hull->order(), 0);
    for (Elem x = 0; x < m->order(); ++x) back[hull.embedding(x)] = x;
    std::vector<Elem> to_m(n.module->order());
    for (Elem i = 0; i < to_m.size(); ++i) to_m[i] = back[n.inclusion(i)];
    const ModuleHom n_to_m(n.module, m, std::move(to_m));
    for (Elem f = 0; f < end_m.homs.size(); ++f) {
      const auto ext = extend_hom(n, compose(end_m.homs[f], n_to_m), ctx.with_debug(false));
      if (ext.map.table() != end_hull.homs[map[f]].table())
        fail(ErrorKind::InternalInconsistency, "extension disagrees with the restriction lookup");
    }
  }
  auto emb = make_ring_embedding(end_m.ring, end_hull.ring, std::move(map));
  const bool surjective = emb.is_surjective();
  return {std::move(hull), std::move(end_m), std::move(end_hull), std::move(emb), surjective};
}

EndTransferReport end_transfer_check(const ModulePtr& m, const RingEmbedding& emb, const Context& ctx) {
  if (!same_ring(*m->ring(), *emb.target)) fail(ErrorKind::RingMismatch, "M is not a module over the target ring");
  EndTransferReport out;
  const auto r = emb.source;
  const auto m_r = restrict_scalars(m, r, emb.map, m->label() + "_R");
  const auto h_r = as_right_module(emb, "H_R");
  std::vector<Elem> r_members = emb.map;
  std::sort(r_members.begin(), r_members.end());
  const auto r_in_h = make_submodule(h_r, std::move(r_members));
  out.premise = rel_dense_in(r_in_h, whole_submodule(h_r), m_r).answer;

  const auto end_h = hom_group(m, m);
  const auto end_r = hom_group(m_r, m_r);
  out.end_h = end_h.size();
  out.end_r = end_r.size();
  out.contained = true;
  for (std::size_t i = 0; i < end_h.basis_size(); ++i) {
    const auto f = end_h.basis_hom(i);
    for (Elem x = 0; x < m->order() && out.contained; ++x)
      for (Elem s = 0; s < r->order(); ++s)
        if (f(m_r->act(x, s)) != m_r->act(f(x), s)) {
          out.contained = false;
          out.violations.push_back("H-endomorphism " + std::to_string(i) + " is not R-linear at " + pair_text(x, s));
          break;
        }
  }
  out.equal = out.contained && out.end_h == out.end_r;
  if (out.premise && !out.equal) out.violations.push_back("R is M-dense in H but End_R(M) != End_H(M)");

  out.ring_of_quotients = is_right_ring_of_quotients(emb).answer;
  const auto e_r = injective_hull(regular_module(r), ctx).hull;
  out.dense_over_hull = rel_dense_in(r_in_h, whole_submodule(h_r), e_r).answer;
  out.nonsingular = is_nonsingular(m_r, ctx);

  const auto h = regular_module(emb.target);
  std::vector<ModulePtr> copies;
  for (std::size_t k = 1; k <= 2 && !out.in_free; ++k) {
    copies.push_back(h);
    std::uint64_t order = 1;
    for (std::size_t i = 0; i < k; ++i) order *= h->order();
    if (order > ctx.config.max_module_order) break;
    const auto f = copies.size() == 1 ? h : direct_sum(copies).module;
    const auto into = hom_group(m, f);
    if (into.size() > ctx.config.max_hom_maps) break;
    for (std::uint64_t i = 0; i < into.size() && !out.in_free; ++i) {
      const auto g = into.at(i);
      if (!g.is_injective()) continue;
      out.in_free = true;
      const auto back = hom_group(f, m);
      if (back.size() > ctx.config.max_hom_maps) break;
      for (std::uint64_t j = 0; j < back.size() && !out.projective; ++j) {
        const auto p = back.at(j);
        bool retracts = true;
        for (std::size_t k2 = 0; k2 < m->group().rank() && retracts; ++k2) {
          const Elem x = m->group().generator(k2);
          retracts = p(g(x)) == x;
        }
        out.projective = retracts;
      }
    }
  }

  if (out.ring_of_quotients) {
    if (!out.dense_over_hull) out.violations.push_back("R is not E(R)-dense in H");
    if (out.nonsingular && !out.premise) out.violations.push_back("M_R nonsingular but R is not M-dense in H");
    if (out.in_free && !out.premise) out.violations.push_back("M embeds in a free H-module but R is not M-dense in H");
    if (out.projective && !out.equal) out.violations.push_back("M is H-projective but End_R(M) != End_H(M)");
  }
  return out;
}

MatrixQuotientReport matrix_quotient_check(const RingPtr& r, std::size_t n, std::size_t k, const Context& ctx) {
  if (n == 0 || k == 0) fail(ErrorKind::ShapeMismatch, "matrix sizes must be positive");
  MatrixQuotientReport out;
  const auto q = q_max(r, ctx);
  out.q_order = q.q->order();
  const std::size_t nk = n * k;

  const auto q_r = as_right_module(q.embedding, "Q_R");
  std::vector<ModulePtr> q_parts(nk, q_r), r_parts(nk, regular_module(r));
  const auto v = nk == 1 ? DirectSum{q_r, {identity_hom(q_r)}, {identity_hom(q_r)}} : direct_sum(q_parts);
  if (v.module->order() > ctx.config.max_module_order) throw CapExceeded("Q^{nk}", ctx.config.max_module_order);
  const auto free = nk == 1 ? regular_module(r) : direct_sum(r_parts).module;
  out.hull_order = rational_hull(free, ctx).hull->order();
  out.hull_matches = out.hull_order == v.module->order();

  const auto end = end_ring(v.module, ctx);
  out.end_order = end.ring->order();
  const auto inner = matrix_ring(q.q, n);
  const auto outer = matrix_ring(inner.ring, k);
  out.matrix_order = outer.ring->order();
  if (out.matrix_order != out.end_order) return out;

  const auto& qq = *q.q;
  const auto& vm = *v.module;
  std::vector<Elem> map(outer.ring->order());
  std::vector<Elem> full(nk * nk), comp(nk), table(vm.order());
  for (Elem a = 0; a < outer.ring->order(); ++a) {
    for (std::size_t bi = 0; bi < k; ++bi)
      for (std::size_t bj = 0; bj < k; ++bj) {
        const auto& block = inner.entries[outer.entries[a][bi * k + bj]];
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) full[(bi * n + i) * nk + bj * n + j] = block[i * n + j];
      }
    for (Elem x = 0; x < vm.order(); ++x) {
      for (std::size_t j = 0; j < nk; ++j) comp[j] = v.projections[j](x);
      Elem y = 0;
      for (std::size_t i = 0; i < nk; ++i) {
        Elem c = 0;
        for (std::size_t j = 0; j < nk; ++j) c = qq.add(c, qq.mul(full[i * nk + j], comp[j]));
        y = vm.add(y, v.injections[i](c));
      }
      table[x] = y;
    }
    ModuleHom f(v.module, v.module, table);
    f.check_linear();
    map[a] = end.index_of(f);
  }
  try {
    make_ring_embedding(outer.ring, end.ring, std::move(map));
    out.isomorphism = true;
  } catch (const AlgebraError&) {
    out.isomorphism = false;
  }
  return out;
}

QuasiInjectiveOmegaReport quasi_injective_omega_check(const ModulePtr& m, const Context& ctx) {
  QuasiInjectiveOmegaReport out;
  const auto om = omega(m, ctx);
  out.quasi_injective = is_quasi_injective(m, ctx);
  out.polyform = is_polyform(m, ctx);
  out.omega_surjective = om.surjective;
  out.hull_polyform = is_polyform(om.hull.hull, ctx);
  out.hull_quasi_injective = is_quasi_injective(om.hull.hull, ctx);
  out.proper = om.hull.hull->order() > m->order();
  out.end_order = om.end_m.ring->order();
  out.end_hull_order = om.end_hull.ring->order();
  if (out.quasi_injective && !out.omega_surjective) out.violations.push_back("quasi-injective but Omega not onto");
  if (out.polyform && out.omega_surjective && !out.quasi_injective)
    out.violations.push_back("polyform with Omega onto but not quasi-injective");
  if (out.polyform != (out.hull_polyform && out.hull_quasi_injective))
    out.violations.push_back("polyform differs from: rational hull polyform and quasi-injective");
  if (out.quasi_injective) {
    const auto qe = q_max(om.end_m.ring, ctx);
    out.q_end_order = qe.q->order();
    out.q_end_identified = identify_quotient_ring(qe, om.omega).has_value();
    if (*out.q_end_order != out.end_hull_order) out.violations.push_back("|Q(End M)| != |End(~E(M))|");
    if (!*out.q_end_identified) out.violations.push_back("Q(End M) not identified with End(~E(M)) through Omega");
  }
  return out;
}

}  // namespace qhull
