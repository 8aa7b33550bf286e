#include "qhull/structure.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "qhull/error.hpp"

namespace qhull {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : v) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<Elem> sorted_unique(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Submodule::Submodule(ModulePtr ambient, std::vector<Elem> members)
    : ambient_(std::move(ambient)), members_(std::move(members)), mask_(ambient_->order(), 0) {
  for (auto e : members_) mask_[e] = 1;
}

bool Submodule::subset_of(const Submodule& other) const {
  if (size() > other.size()) return false;
  for (auto e : members_)
    if (!other.contains(e)) return false;
  return true;
}

Submodule make_submodule(const ModulePtr& m, std::vector<Elem> members) {
  members = sorted_unique(std::move(members));
  for (auto e : members)
    if (e >= m->order()) fail(ErrorKind::NotASubmodule, "element " + std::to_string(e) + " out of range");
  Submodule s(m, members);
  if (!s.contains(0)) fail(ErrorKind::NotASubmodule, "does not contain 0");
  for (auto a : members) {
    for (auto b : members)
      if (!s.contains(m->add(a, b)))
        fail(ErrorKind::NotASubmodule, "not closed under addition at " + std::to_string(a) + "+" + std::to_string(b));
    for (Elem r = 0; r < m->ring()->order(); ++r)
      if (!s.contains(m->act(a, r)))
        fail(ErrorKind::NotASubmodule, "not closed under action at " + std::to_string(a) + "·" + std::to_string(r));
  }
  return s;
}

Submodule zero_submodule(const ModulePtr& m) { return Submodule(m, {0}); }

Submodule whole_submodule(const ModulePtr& m) {
  std::vector<Elem> all(m->order());
  for (Elem i = 0; i < all.size(); ++i) all[i] = i;
  return Submodule(m, std::move(all));
}

Submodule cyclic_submodule(const ModulePtr& m, Elem x) {
  std::vector<Elem> out;
  out.reserve(m->ring()->order());
  for (Elem r = 0; r < m->ring()->order(); ++r) out.push_back(m->act(x, r));
  return Submodule(m, sorted_unique(std::move(out)));
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  const auto& m = *a.ambient();
  if (b.subset_of(a)) return a;
  if (a.subset_of(b)) return b;
  std::vector<std::uint8_t> mask(m.order(), 0);
  std::vector<Elem> out;
  for (auto x : a.members())
    for (auto y : b.members()) {
      const Elem s = m.add(x, y);
      if (!mask[s]) {
        mask[s] = 1;
        out.push_back(s);
      }
    }
  std::sort(out.begin(), out.end());
  return Submodule(a.ambient(), std::move(out));
}

Submodule submodule_intersection(const Submodule& a, const Submodule& b) {
  std::vector<Elem> out;
  for (auto x : a.members())
    if (b.contains(x)) out.push_back(x);
  return Submodule(a.ambient(), std::move(out));
}

Submodule submodule_generated(const ModulePtr& m, const std::vector<Elem>& gens) {
  Submodule cur = zero_submodule(m);
  for (auto g : gens) {
    if (g >= m->order()) fail(ErrorKind::NotASubmodule, "generator out of range");
    if (!cur.contains(g)) cur = submodule_sum(cur, cyclic_submodule(m, g));
  }
  return cur;
}

void require_submodule_of(const Submodule& n, const RightModule& m) {
  if (!same_module(*n.ambient(), m)) fail(ErrorKind::NotASubmodule, "submodule of a different module");
}

std::vector<Submodule> enumerate_between(const Submodule& lower, const Submodule& upper, std::uint64_t cap) {
  const auto& m = upper.ambient();
  if (!lower.subset_of(upper)) fail(ErrorKind::NotASubmodule, "lower bound not contained in upper bound");
  std::vector<Submodule> cyclics;
  {
    std::unordered_set<std::vector<Elem>, VecHash> seen;
    for (auto x : upper.members()) {
      if (lower.contains(x)) continue;
      auto c = cyclic_submodule(m, x);
      if (seen.insert(c.members()).second) cyclics.push_back(std::move(c));
    }
  }
  std::vector<Submodule> found{lower};
  std::unordered_set<std::vector<Elem>, VecHash> seen{lower.members()};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& c : cyclics) {
      if (c.subset_of(found[head])) continue;
      auto next = submodule_sum(found[head], c);
      if (seen.insert(next.members()).second) {
        if (found.size() >= cap) throw CapExceeded("submodule lattice", cap);
        found.push_back(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Submodule& a, const Submodule& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return found;
}

std::vector<Submodule> enumerate_submodules(const ModulePtr& m, std::uint64_t cap) {
  return enumerate_between(zero_submodule(m), whole_submodule(m), cap);
}

std::vector<RightIdeal> enumerate_right_ideals(const RingPtr& ring, std::uint64_t cap) {
  return enumerate_submodules(regular_module(ring), cap);
}

Submodule socle(const ModulePtr& m) {
  const std::size_t n = m->order();
  std::vector<std::size_t> orbit(n, 0);
  for (Elem x = 0; x < n; ++x) orbit[x] = cyclic_submodule(m, x).size();
  std::vector<Elem> simple_gens;
  for (Elem x = 1; x < n; ++x) {
    auto c = cyclic_submodule(m, x);
    bool simple = true;
    for (auto y : c.members())
      if (y != 0 && orbit[y] != orbit[x]) {
        simple = false;
        break;
      }
    if (simple) simple_gens.push_back(x);
  }
  return submodule_generated(m, simple_gens);
}

SubmoduleModule submodule_as_module(const Submodule& n, std::string label) {
  const auto& amb = n.ambient();
  const auto& mem = n.members();
  std::vector<Elem> pos(amb->order(), 0);
  for (Elem i = 0; i < mem.size(); ++i) pos[mem[i]] = i;
  auto built = build_module(
      amb->ring(), mem.size(), [&](Elem a, Elem b) { return pos[amb->add(mem[a], mem[b])]; },
      [&](Elem a, Elem r) { return pos[amb->act(mem[a], r)]; }, std::move(label));
  std::vector<Elem> incl(mem.size());
  for (Elem i = 0; i < mem.size(); ++i) incl[i] = mem[built.to_label[i]];
  return {built.module, ModuleHom(built.module, amb, std::move(incl))};
}

QuotientModule quotient_module(const ModulePtr& m, const Submodule& n, std::string label) {
  require_submodule_of(n, *m);
  const std::size_t order = m->order();
  std::vector<Elem> coset(order, static_cast<Elem>(order));
  std::vector<Elem> reps;
  for (Elem x = 0; x < order; ++x) {
    if (coset[x] != order) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (auto y : n.members()) coset[m->add(x, y)] = id;
  }
  auto built = build_module(
      m->ring(), reps.size(), [&](Elem a, Elem b) { return coset[m->add(reps[a], reps[b])]; },
      [&](Elem a, Elem r) { return coset[m->act(reps[a], r)]; }, std::move(label));
  std::vector<Elem> proj(order);
  for (Elem x = 0; x < order; ++x) proj[x] = built.from_label[coset[x]];
  return {built.module, ModuleHom(m, built.module, std::move(proj))};
}

DirectSum direct_sum(const std::vector<ModulePtr>& parts, std::string label) {
  if (parts.empty()) fail(ErrorKind::ShapeMismatch, "direct sum of an empty list");
  for (const auto& p : parts) require_same_ring(*parts.front(), *p);
  const RingPtr& ring = parts.front()->ring();

  std::vector<std::uint32_t> all;
  std::vector<std::pair<std::size_t, std::size_t>> origin;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (std::size_t j = 0; j < parts[p]->group().rank(); ++j) {
      all.push_back(parts[p]->group().factor(j));
      origin.emplace_back(p, j);
    }
  const auto perm = canonical_factor_order(all);
  std::vector<std::uint32_t> sorted;
  std::vector<std::vector<std::size_t>> pos(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) pos[p].resize(parts[p]->group().rank());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    sorted.push_back(all[perm[i]]);
    pos[origin[perm[i]].first][origin[perm[i]].second] = i;
  }
  AbelianGroup group(sorted);

  auto encode = [&](const std::vector<Elem>& comps) {
    std::vector<std::uint32_t> c(group.rank());
    for (std::size_t p = 0; p < parts.size(); ++p) {
      auto cs = parts[p]->group().coords(comps[p]);
      for (std::size_t j = 0; j < cs.size(); ++j) c[pos[p][j]] = cs[j];
    }
    return group.from_coords(std::span<const std::uint32_t>(c));
  };
  auto decode = [&](Elem idx) {
    auto c = group.coords(idx);
    std::vector<Elem> comps(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
      std::vector<std::uint32_t> cs(parts[p]->group().rank());
      for (std::size_t j = 0; j < cs.size(); ++j) cs[j] = c[pos[p][j]];
      comps[p] = parts[p]->group().from_coords(std::span<const std::uint32_t>(cs));
    }
    return comps;
  };

  const std::size_t n = group.order();
  const std::size_t rn = ring->order();
  std::vector<Elem> act(n * rn);
  std::vector<std::vector<Elem>> decoded(n);
  for (Elem idx = 0; idx < n; ++idx) {
    decoded[idx] = decode(idx);
    std::vector<Elem> comps(parts.size());
    for (Elem r = 0; r < rn; ++r) {
      for (std::size_t p = 0; p < parts.size(); ++p) comps[p] = parts[p]->act(decoded[idx][p], r);
      act[idx * rn + r] = encode(comps);
    }
  }
  if (label.empty()) {
    for (std::size_t p = 0; p < parts.size(); ++p) label += (p ? " + " : "") + parts[p]->label();
  }
  auto sum = std::make_shared<const RightModule>(ring, group, std::move(act), std::move(label));

  DirectSum out{sum, {}, {}};
  for (std::size_t p = 0; p < parts.size(); ++p) {
    std::vector<Elem> inj(parts[p]->order());
    std::vector<Elem> comps(parts.size(), 0);
    for (Elem m = 0; m < inj.size(); ++m) {
      comps[p] = m;
      inj[m] = encode(comps);
    }
    std::vector<Elem> proj(n);
    for (Elem idx = 0; idx < n; ++idx) proj[idx] = decoded[idx][p];
    out.injections.emplace_back(parts[p], sum, std::move(inj));
    out.projections.emplace_back(sum, parts[p], std::move(proj));
  }
  return out;
}

Submodule image(const ModuleHom& f) {
  std::vector<Elem> out(f.table().begin(), f.table().end());
  return Submodule(f.target(), sorted_unique(std::move(out)));
}

Submodule kernel(const ModuleHom& f) {
  std::vector<Elem> out;
  for (Elem x = 0; x < f.source()->order(); ++x)
    if (f(x) == 0) out.push_back(x);
  return Submodule(f.source(), std::move(out));
}

Submodule image_of(const ModuleHom& f, const Submodule& n) {
  std::vector<Elem> out;
  for (auto x : n.members()) out.push_back(f(x));
  return Submodule(f.target(), sorted_unique(std::move(out)));
}

Submodule preimage(const ModuleHom& f, const Submodule& k) {
  std::vector<Elem> out;
  for (Elem x = 0; x < f.source()->order(); ++x)
    if (k.contains(f(x))) out.push_back(x);
  return Submodule(f.source(), std::move(out));
}

RightIdeal preimage_ideal(Elem x, const Submodule& k) {
  const auto& m = *k.ambient();
  std::vector<Elem> out;
  for (Elem r = 0; r < m.ring()->order(); ++r)
    if (k.contains(m.act(x, r))) out.push_back(r);
  return Submodule(regular_module(m.ring()), std::move(out));
}

RightIdeal element_annihilator(const ModulePtr& m, Elem x) {
  std::vector<Elem> out;
  for (Elem r = 0; r < m->ring()->order(); ++r)
    if (m->act(x, r) == 0) out.push_back(r);
  return Submodule(regular_module(m->ring()), std::move(out));
}

std::vector<Elem> submodule_generators(const Submodule& n) {
  std::vector<Elem> gens;
  Submodule cur = zero_submodule(n.ambient());
  for (auto x : n.members()) {
    if (cur.contains(x)) continue;
    gens.push_back(x);
    cur = submodule_sum(cur, cyclic_submodule(n.ambient(), x));
  }
  return gens;
}

Submodule module_annihilator(const ModulePtr& m, const RightIdeal& ideal) {
  if (!same_ring(*ideal.ambient()->ring(), *m->ring())) fail(ErrorKind::ShapeMismatch, "ideal of a different ring");
  const auto gens = submodule_generators(ideal);
  std::vector<Elem> out;
  for (Elem x = 0; x < m->order(); ++x) {
    bool kills = true;
    for (auto g : gens)
      if (m->act(x, g) != 0) {
        kills = false;
        break;
      }
    if (kills) out.push_back(x);
  }
  return Submodule(m, std::move(out));
}

std::vector<ModuleHom> hom_annihilator(const std::vector<ModuleHom>& homs, const Submodule& n) {
  std::vector<ModuleHom> out;
  for (const auto& f : homs) {
    if (!same_module(*f.source(), *n.ambient())) fail(ErrorKind::ShapeMismatch, "homs do not start at N's ambient");
    bool kills = true;
    for (auto x : n.members())
      if (f(x) != 0) {
        kills = false;
        break;
      }
    if (kills) out.push_back(f);
  }
  return out;
}

Submodule common_kernel(const ModulePtr& m, const std::vector<ModuleHom>& homs) {
  std::vector<Elem> out;
  for (const auto& f : homs)
    if (!same_module(*f.source(), *m)) fail(ErrorKind::ShapeMismatch, "hom does not start at M");
  for (Elem x = 0; x < m->order(); ++x) {
    bool killed = true;
    for (const auto& f : homs)
      if (f(x) != 0) {
        killed = false;
        break;
      }
    if (killed) out.push_back(x);
  }
  return Submodule(m, std::move(out));
}

bool is_two_sided(const RightIdeal& ideal) {
  const auto& ring = *ideal.ambient()->ring();
  for (auto g : submodule_generators(ideal))
    for (Elem r = 0; r < ring.order(); ++r)
      if (!ideal.contains(ring.mul(r, g))) return false;
  return true;
}

}  // namespace qhull
