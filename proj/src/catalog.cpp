#include "qhull/catalog.hpp"

#include <algorithm>

#include "qhull/constructions.hpp"
#include "qhull/structure.hpp"

namespace qhull {

namespace {

// Generators are printed as integers k·1 when 1 generates R additively (Z/n),
// otherwise as canonical element indices.
std::string generator_label(const Submodule& i) {
  const auto& ring = *i.ambient()->ring();
  std::vector<std::int64_t> as_int(ring.order(), -1);
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(ring.order()); ++k) as_int[ring.from_int(k)] = k;
  const bool cyclic = std::find(as_int.begin(), as_int.end(), -1) == as_int.end();
  std::string out = "R/<";
  bool first = true;
  for (auto g : submodule_generators(i)) {
    out += (first ? "" : ",") + std::to_string(cyclic ? as_int[g] : g);
    first = false;
  }
  return out + ">";
}

struct Builder {
  const Config& config;
  Catalog& catalog;
  CatalogEntry entry;

  void add(const ModulePtr& m) {
    if (m->order() > config.max_module_order)
      catalog.trimmed.push_back(instance_id(*m));
    else
      entry.modules.push_back(m);
  }
  void add_sum(const std::vector<ModulePtr>& parts) {
    std::uint64_t order = 1;
    for (const auto& p : parts) order *= p->order();
    std::string label;
    for (const auto& p : parts) label += (label.empty() ? "" : " + ") + p->label();
    if (order > config.max_module_order) {
      catalog.trimmed.push_back(entry.ring->name() + " :: " + label);
      return;
    }
    entry.modules.push_back(direct_sum(parts, label).module);
  }
  // Regular module and every R/I with 0 ≠ I ≠ R. Returns the quotients.
  std::vector<ModulePtr> standard() {
    const auto r = regular_module(entry.ring);
    add(r);
    std::vector<ModulePtr> quotients;
    for (const auto& i : enumerate_right_ideals(entry.ring, config.max_lattice)) {
      if (i.is_zero() || i.is_whole()) continue;
      quotients.push_back(quotient_module(r, i, generator_label(i)).module);
      add(quotients.back());
    }
    return quotients;
  }
  void finish() {
    if (!entry.modules.empty()) catalog.entries.push_back(std::move(entry));
    entry = {};
  }
};

}  // namespace

std::size_t Catalog::instance_count() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.modules.size();
  return n;
}

std::string instance_id(const RightModule& m) { return m.ring()->name() + " :: " + m.label(); }

Catalog builtin_catalog(const Config& config, const CatalogOptions& options) {
  Catalog catalog;
  if (config.max_module_order == 0) return catalog;
  Builder b{config, catalog, {}};
  auto start = [&](RingPtr ring, std::vector<std::string> tags) {
    if (options.commutative_only && !ring->is_commutative()) return false;
    b.entry.ring = std::move(ring);
    b.entry.tags = std::move(tags);
    return true;
  };

  for (std::uint32_t n : {2u, 3u}) {
    if (!start(zmod(n), {"commutative", "field"})) continue;
    b.standard();
    const auto r = regular_module(b.entry.ring);
    b.add_sum({r, r});
    b.finish();
  }
  if (start(zmod(4), {"commutative", "self-injective", "singular-modules"})) {
    const auto q = b.standard();
    const auto r = regular_module(b.entry.ring);
    b.add_sum({r, q[0]});
    b.add_sum({q[0], q[0]});
    b.finish();
  }
  if (start(zmod(6), {"commutative", "semisimple"})) {
    const auto q = b.standard();
    b.add_sum({q[0], q[1]});
    b.finish();
  }
  if (start(zmod(8), {"commutative", "self-injective", "singular-modules"})) {
    const auto q = b.standard();
    b.add_sum({q[0], q[1]});
    b.finish();
  }
  if (start(galois_field(4), {"commutative", "field"})) {
    b.standard();
    b.finish();
  }
  if (start(product_ring(galois_field(2), galois_field(2)), {"commutative", "semisimple"})) {
    const auto q = b.standard();
    b.add_sum({q[0], q[1]});
    b.add_sum({q[0], q[0]});
    b.finish();
  }
  for (std::uint32_t p : {2u, 3u}) {
    const auto t2 = upper_triangular_ring(galois_field(p), 2);
    if (!start(t2.ring, {"noncommutative", "nonsingular", "not-self-injective", "worked-example"})) continue;
    b.standard();
    const auto corner = t2_corner(t2);
    const auto bottom = t2_bottom_row(t2);
    b.add(corner);
    b.add(bottom);
    if (p == 2) {
      b.add_sum({corner, corner});
      b.add_sum({corner, bottom});
      b.add_sum({regular_module(t2.ring), corner});
    }
    b.finish();
  }
  if (start(matrix_ring(galois_field(2), 2).ring, {"noncommutative", "simple", "semisimple"})) {
    const auto q = b.standard();
    b.add_sum({q[0], q[1]});
    b.finish();
  }
  return catalog;
}

Catalog catalog_from_document(const Document& doc) {
  Catalog catalog;
  for (const auto& r : doc.rings) {
    CatalogEntry entry{r, {}, {"file"}};
    for (const auto& m : doc.modules)
      if (m.module->ring() == r) entry.modules.push_back(m.module);
    if (entry.modules.empty()) entry.modules.push_back(regular_module(r));
    catalog.entries.push_back(std::move(entry));
  }
  return catalog;
}

}  // namespace qhull
