#include "qhull/module.hpp"

#include "qhull/error.hpp"

namespace qhull {

RightModule::RightModule(RingPtr ring, AbelianGroup group, std::vector<Elem> act, std::string label)
    : ring_(std::move(ring)), group_(std::move(group)), act_(std::move(act)), label_(std::move(label)) {
  if (act_.size() != group_.order() * ring_->order()) fail(ErrorKind::ShapeMismatch, "action table size");
}

ModulePtr RightModule::relabeled(std::string label) const {
  return std::make_shared<const RightModule>(ring_, group_, act_, std::move(label));
}

bool same_module(const RightModule& a, const RightModule& b) {
  if (&a == &b) return true;
  return same_ring(*a.ring(), *b.ring()) && a.group() == b.group() && a.act_table() == b.act_table();
}

void require_same_ring(const RightModule& a, const RightModule& b) {
  if (!same_ring(*a.ring(), *b.ring()))
    fail(ErrorKind::RingMismatch, "modules '" + a.label() + "' and '" + b.label() + "' have different rings");
}

void check_module_axioms(const RightModule& m) {
  const auto& ring = *m.ring();
  const auto rgens = ring.additive_generators();
  const std::size_t n = m.order();
  if (m.group().exponent() > 0 && ring.characteristic() % m.group().exponent() != 0)
    fail(ErrorKind::NotLinear, "additive exponent does not divide the ring characteristic");
  for (Elem x = 0; x < n; ++x)
    if (m.act(x, ring.one()) != x) fail(ErrorKind::NotUnital, "m·1 != m for m=" + std::to_string(x));
  for (Elem x = 0; x < n; ++x)
    for (std::size_t i = 0; i < m.group().rank(); ++i) {
      const Elem g = m.group().generator(i);
      for (Elem r = 0; r < ring.order(); ++r)
        if (m.act(m.add(x, g), r) != m.add(m.act(x, r), m.act(g, r)))
          fail(ErrorKind::NotLinear, "(a+b)r != ar+br at a=" + std::to_string(x) + " b=" + std::to_string(g) +
                                         " r=" + std::to_string(r));
    }
  for (Elem x = 0; x < n; ++x)
    for (Elem r = 0; r < ring.order(); ++r) {
      for (Elem s : rgens)
        if (m.act(x, ring.add(r, s)) != m.add(m.act(x, r), m.act(x, s)))
          fail(ErrorKind::NotLinear, "m(r+s) != mr+ms at m=" + std::to_string(x));
      const Elem xr = m.act(x, r);
      for (Elem s = 0; s < ring.order(); ++s)
        if (m.act(xr, s) != m.act(x, ring.mul(r, s)))
          fail(ErrorKind::NotLinear, "(mr)s != m(rs) at m=" + std::to_string(x) + " r=" + std::to_string(r) +
                                         " s=" + std::to_string(s));
    }
}

ValidatedModule module_from_action_labeled(RingPtr ring, const std::vector<std::vector<Elem>>& add,
                                           const std::vector<std::vector<Elem>>& act, std::string label) {
  const std::size_t n = add.size();
  if (n == 0 || act.size() != n) fail(ErrorKind::ShapeMismatch, "module tables must have equal order");
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || act[i].size() != ring->order())
      fail(ErrorKind::ShapeMismatch, "row " + std::to_string(i));
    for (auto v : add[i])
      if (v >= n) fail(ErrorKind::ShapeMismatch, "index out of range in row " + std::to_string(i));
    for (auto v : act[i])
      if (v >= n) fail(ErrorKind::ShapeMismatch, "index out of range in row " + std::to_string(i));
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (add[a][b] != add[b][a]) fail(ErrorKind::NotAGroup, "addition not commutative");
  auto dec = decompose(n, [&](Elem a, Elem b) { return add[a][b]; });
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (dec.from_label[add[a][b]] != dec.group.add(dec.from_label[a], dec.from_label[b]))
        fail(ErrorKind::NotAGroup, "addition table inconsistent at (" + std::to_string(a) + ", " +
                                       std::to_string(b) + ")");
  std::vector<Elem> table(n * ring->order());
  for (Elem i = 0; i < n; ++i)
    for (Elem r = 0; r < ring->order(); ++r) table[i * ring->order() + r] = dec.from_label[act[dec.to_label[i]][r]];
  auto m = std::make_shared<const RightModule>(std::move(ring), dec.group, std::move(table), std::move(label));
  check_module_axioms(*m);
  return {std::move(m), std::move(dec.from_label)};
}

ModulePtr module_from_action(RingPtr ring, const std::vector<std::vector<Elem>>& add,
                             const std::vector<std::vector<Elem>>& act, std::string label) {
  return module_from_action_labeled(std::move(ring), add, act, std::move(label)).module;
}

ModulePtr regular_module(const RingPtr& ring) {
  return std::make_shared<const RightModule>(ring, ring->group(), ring->mul_table(), "R");
}

BuiltModule build_module(const RingPtr& ring, std::size_t n, const std::function<Elem(Elem, Elem)>& add,
                         const std::function<Elem(Elem, Elem)>& act, std::string label) {
  auto dec = decompose(n, add);
  const std::size_t rn = ring->order();
  std::vector<Elem> table(n * rn);
  for (Elem i = 0; i < n; ++i)
    for (Elem r = 0; r < rn; ++r) table[i * rn + r] = dec.from_label[act(dec.to_label[i], r)];
  auto m = std::make_shared<const RightModule>(ring, dec.group, std::move(table), std::move(label));
  return {std::move(m), std::move(dec.to_label), std::move(dec.from_label)};
}

ModuleHom::ModuleHom(ModulePtr source, ModulePtr target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (map_.size() != source_->order()) fail(ErrorKind::ShapeMismatch, "hom table size");
}

bool ModuleHom::is_injective() const {
  std::vector<bool> seen(target_->order(), false);
  for (auto v : map_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool ModuleHom::is_surjective() const {
  std::vector<bool> seen(target_->order(), false);
  std::size_t hit = 0;
  for (auto v : map_)
    if (!seen[v]) {
      seen[v] = true;
      ++hit;
    }
  return hit == target_->order();
}

bool ModuleHom::is_zero() const {
  for (auto v : map_)
    if (v != 0) return false;
  return true;
}

void ModuleHom::check_linear() const {
  const auto& s = *source_;
  const auto& t = *target_;
  require_same_ring(s, t);
  for (Elem a = 0; a < s.order(); ++a) {
    for (std::size_t i = 0; i < s.group().rank(); ++i) {
      const Elem g = s.group().generator(i);
      if (map_[s.add(a, g)] != t.add(map_[a], map_[g]))
        fail(ErrorKind::NotLinear, "map not additive at " + std::to_string(a));
    }
    for (Elem r = 0; r < s.ring()->order(); ++r)
      if (map_[s.act(a, r)] != t.act(map_[a], r))
        fail(ErrorKind::NotLinear, "map not R-linear at m=" + std::to_string(a) + " r=" + std::to_string(r));
  }
}

ModuleHom identity_hom(const ModulePtr& m) {
  std::vector<Elem> map(m->order());
  for (Elem i = 0; i < m->order(); ++i) map[i] = i;
  return ModuleHom(m, m, std::move(map));
}

ModuleHom zero_hom(const ModulePtr& source, const ModulePtr& target) {
  return ModuleHom(source, target, std::vector<Elem>(source->order(), 0));
}

ModuleHom compose(const ModuleHom& outer, const ModuleHom& inner) {
  std::vector<Elem> map(inner.source()->order());
  for (Elem i = 0; i < map.size(); ++i) map[i] = outer(inner(i));
  return ModuleHom(inner.source(), outer.target(), std::move(map));
}

ModuleHom add_homs(const ModuleHom& a, const ModuleHom& b) {
  std::vector<Elem> map(a.source()->order());
  for (Elem i = 0; i < map.size(); ++i) map[i] = a.target()->add(a(i), b(i));
  return ModuleHom(a.source(), a.target(), std::move(map));
}

ModulePtr restrict_scalars(const ModulePtr& m, const RingPtr& base, const std::vector<Elem>& ring_map,
                           std::string label) {
  if (ring_map.size() != base->order()) fail(ErrorKind::ShapeMismatch, "ring map size");
  const std::size_t rn = base->order();
  std::vector<Elem> table(m->order() * rn);
  for (Elem x = 0; x < m->order(); ++x)
    for (Elem r = 0; r < rn; ++r) table[x * rn + r] = m->act(x, ring_map[r]);
  return std::make_shared<const RightModule>(base, m->group(), std::move(table), std::move(label));
}

}  // namespace qhull
