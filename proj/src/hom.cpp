#include "qhull/hom.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "qhull/error.hpp"
#include "qhull/zmod_linear.hpp"

namespace qhull {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint32_t log_p(std::uint32_t q, std::uint32_t p) {
  std::uint32_t e = 0;
  while (q > 1) {
    q /= p;
    ++e;
  }
  return e;
}

std::int64_t ipow(std::int64_t p, std::uint32_t e) {
  std::int64_t r = 1;
  while (e--) r *= p;
  return r;
}

std::int64_t mod(std::int64_t x, std::int64_t m) {
  x %= m;
  return x < 0 ? x + m : x;
}

}  // namespace

std::size_t VectorHash::operator()(const std::vector<Elem>& v) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto x : v) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

HomSpace::HomSpace(ModulePtr source, ModulePtr target, std::vector<std::vector<Elem>> basis,
                   std::vector<std::uint64_t> orders)
    : source_(std::move(source)), target_(std::move(target)), basis_(std::move(basis)), orders_(std::move(orders)) {
  for (auto o : orders_) size_ = saturating_mul(size_, o);
}

std::vector<Elem> HomSpace::generator_images(std::uint64_t index) const {
  const std::size_t rank = source_->group().rank();
  std::vector<Elem> img(rank, 0);
  for (std::size_t i = orders_.size(); i-- > 0;) {
    const std::uint64_t c = index % orders_[i];
    index /= orders_[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k < rank; ++k)
      img[k] = target_->add(img[k], target_->scale(static_cast<std::int64_t>(c), basis_[i][k]));
  }
  return img;
}

ModuleHom HomSpace::at(std::uint64_t index) const {
  return hom_from_generator_images(source_, target_, generator_images(index));
}

ModuleHom HomSpace::basis_hom(std::size_t i) const { return hom_from_generator_images(source_, target_, basis_[i]); }

std::vector<ModuleHom> HomSpace::all(std::uint64_t cap) const {
  if (size_ > cap) throw CapExceeded("hom space size", cap);
  std::vector<ModuleHom> out;
  out.reserve(size_);
  for (std::uint64_t i = 0; i < size_; ++i) out.push_back(at(i));
  return out;
}

ModuleHom hom_from_generator_images(const ModulePtr& m, const ModulePtr& n, const std::vector<Elem>& images) {
  const auto& g = m->group();
  std::vector<Elem> table(m->order(), 0);
  for (Elem x = 1; x < table.size(); ++x) {
    std::size_t k = g.rank() - 1;
    while (g.coord(x, k) == 0) --k;
    table[x] = n->add(table[x - g.generator(k)], images[k]);
  }
  return ModuleHom(m, n, std::move(table));
}

std::vector<Elem> generator_images(const ModuleHom& f) {
  const auto& g = f.source()->group();
  std::vector<Elem> img(g.rank());
  for (std::size_t k = 0; k < g.rank(); ++k) img[k] = f(g.generator(k));
  return img;
}

HomSpace hom_group(const ModulePtr& m, const ModulePtr& n) {
  require_same_ring(*m, *n);
  const auto& gm = m->group();
  const auto& gn = n->group();
  const auto rgens = m->ring()->additive_generators();
  std::vector<std::vector<Elem>> basis;
  std::vector<std::uint64_t> orders;

  std::vector<std::uint32_t> primes;
  for (std::size_t k = 0; k < gm.rank(); ++k)
    if (primes.empty() || primes.back() != gm.prime(k)) primes.push_back(gm.prime(k));

  for (auto p : primes) {
    std::vector<std::size_t> ks, ls;
    for (std::size_t k = 0; k < gm.rank(); ++k)
      if (gm.prime(k) == p) ks.push_back(k);
    for (std::size_t l = 0; l < gn.rank(); ++l)
      if (gn.prime(l) == p) ls.push_back(l);
    if (ls.empty()) continue;

    std::vector<std::uint32_t> a(ks.size()), b(ls.size());
    for (std::size_t i = 0; i < ks.size(); ++i) a[i] = log_p(gm.factor(ks[i]), p);
    for (std::size_t j = 0; j < ls.size(); ++j) b[j] = log_p(gn.factor(ls[j]), p);
    const std::uint32_t e = *std::max_element(b.begin(), b.end());
    const std::int64_t pe = ipow(p, e);
    const std::size_t unknowns = ks.size() * ls.size();
    auto var = [&](std::size_t i, std::size_t j) { return i * ls.size() + j; };

    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t j = 0; j < ls.size(); ++j) {
        if (b[j] < e) {
          std::vector<std::int64_t> row(unknowns, 0);
          row[var(i, j)] = ipow(p, b[j]);
          rows.push_back(std::move(row));
        }
        if (a[i] < b[j]) {
          std::vector<std::int64_t> row(unknowns, 0);
          row[var(i, j)] = ipow(p, a[i]);
          rows.push_back(std::move(row));
        }
      }

    // Coordinates of n_{l'}·r in N, per additive generator r of R.
    std::vector<std::vector<std::vector<std::uint32_t>>> target_action(rgens.size());
    for (std::size_t t = 0; t < rgens.size(); ++t)
      for (std::size_t j2 = 0; j2 < ls.size(); ++j2)
        target_action[t].push_back(gn.coords(n->act(gn.generator(ls[j2]), rgens[t])));

    for (std::size_t i = 0; i < ks.size(); ++i)
      for (std::size_t t = 0; t < rgens.size(); ++t) {
        const auto c = gm.coords(m->act(gm.generator(ks[i]), rgens[t]));
        for (std::size_t j = 0; j < ls.size(); ++j) {
          std::vector<std::int64_t> row(unknowns, 0);
          for (std::size_t i2 = 0; i2 < ks.size(); ++i2) row[var(i2, j)] += c[ks[i2]];
          for (std::size_t j2 = 0; j2 < ls.size(); ++j2) {
            std::int64_t coef = target_action[t][j2][ls[j]];
            if (coef == 0) continue;
            if (b[j2] >= b[j]) {
              coef *= ipow(p, b[j2] - b[j]);
            } else {
              const std::int64_t d = ipow(p, b[j] - b[j2]);
              if (coef % d != 0) fail(ErrorKind::InternalInconsistency, "module action does not respect element orders");
              coef /= d;
            }
            row[var(i, j2)] -= coef;
          }
          for (auto& x : row) x = mod(x, pe);
          rows.push_back(std::move(row));
        }
      }

    ZpeMatrix mat(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t u = 0; u < unknowns; ++u) mat.at(r, u) = rows[r][u];
    auto kb = kernel_mod_prime_power(std::move(mat), p, e);

    for (std::size_t g = 0; g < kb.gens.size(); ++g) {
      std::vector<Elem> images(gm.rank(), 0);
      for (std::size_t i = 0; i < ks.size(); ++i) {
        std::vector<std::int64_t> coords(gn.rank(), 0);
        for (std::size_t j = 0; j < ls.size(); ++j) {
          const std::int64_t z = mod(kb.gens[g][var(i, j)], pe);
          const std::int64_t shift = ipow(p, e - b[j]);
          if (z % shift != 0) fail(ErrorKind::InternalInconsistency, "kernel vector outside the target factor");
          coords[ls[j]] = z / shift;
        }
        images[ks[i]] = gn.from_coords(std::span<const std::int64_t>(coords));
      }
      basis.push_back(std::move(images));
      orders.push_back(kb.orders[g]);
    }
  }
  return HomSpace(m, n, std::move(basis), std::move(orders));
}

std::vector<ModuleHom> hom_space(const ModulePtr& m, const ModulePtr& n, const Context& ctx) {
  return hom_group(m, n).all(ctx.config.max_hom_maps);
}

std::uint64_t hom_count(const ModulePtr& m, const ModulePtr& n) { return hom_group(m, n).size(); }

namespace {

bool is_linear_table(const RightModule& m, const RightModule& n, const std::vector<Elem>& t) {
  for (Elem x = 0; x < m.order(); ++x) {
    for (Elem y = x; y < m.order(); ++y)
      if (t[m.add(x, y)] != n.add(t[x], t[y])) return false;
    for (Elem r = 0; r < m.ring()->order(); ++r)
      if (t[m.act(x, r)] != n.act(t[x], r)) return false;
  }
  return true;
}

}  // namespace

std::vector<ModuleHom> hom_space_all_functions(const ModulePtr& m, const ModulePtr& n, std::uint64_t cap) {
  require_same_ring(*m, *n);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m->order(); ++i) total = saturating_mul(total, n->order());
  if (total > cap) throw CapExceeded("exhaustive hom enumeration", cap);
  std::vector<ModuleHom> out;
  std::vector<Elem> t(m->order(), 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    if (t[0] == 0 && is_linear_table(*m, *n, t)) out.emplace_back(m, n, t);
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (++t[i] < n->order()) break;
      t[i] = 0;
    }
  }
  return out;
}

std::vector<ModuleHom> hom_space_generator_search(const ModulePtr& m, const ModulePtr& n, std::uint64_t cap) {
  require_same_ring(*m, *n);
  const auto& gm = m->group();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < gm.rank(); ++i) total = saturating_mul(total, n->order());
  if (total > cap) throw CapExceeded("generator image search", cap);
  std::vector<ModuleHom> out;
  std::vector<Elem> img(gm.rank(), 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    bool orders_ok = true;
    for (std::size_t k = 0; k < gm.rank(); ++k)
      if (n->scale(gm.factor(k), img[k]) != 0) orders_ok = false;
    if (orders_ok) {
      auto f = hom_from_generator_images(m, n, img);
      if (is_linear_table(*m, *n, f.table())) out.push_back(std::move(f));
    }
    for (std::size_t k = 0; k < img.size(); ++k) {
      if (++img[k] < n->order()) break;
      img[k] = 0;
    }
  }
  return out;
}

Elem EndRing::index_of(const ModuleHom& f) const {
  auto it = lookup.find(generator_images(f));
  if (it == lookup.end()) fail(ErrorKind::NotFound, "map is not an endomorphism of " + base->label());
  return it->second;
}

EndRing end_ring(const ModulePtr& m, const Context& ctx) {
  const HomSpace hs = hom_group(m, m);
  if (hs.size() > ctx.config.max_end_ring) throw CapExceeded("endomorphism ring size", ctx.config.max_end_ring);
  const std::size_t n = hs.size();
  const std::size_t rank = m->group().rank();

  std::vector<std::vector<Elem>> imgs(n);
  std::unordered_map<std::vector<Elem>, Elem, VectorHash> by_images;
  for (Elem i = 0; i < n; ++i) {
    imgs[i] = hs.generator_images(i);
    by_images.emplace(imgs[i], i);
  }
  auto find = [&](const std::vector<Elem>& key) {
    auto it = by_images.find(key);
    if (it == by_images.end()) fail(ErrorKind::InternalInconsistency, "endomorphisms not closed under + or ∘");
    return it->second;
  };
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<ModuleHom> tables;
  tables.reserve(n);
  for (Elem i = 0; i < n; ++i) tables.push_back(hom_from_generator_images(m, m, imgs[i]));
  std::vector<Elem> key(rank);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < rank; ++k) key[k] = m->add(imgs[i][k], imgs[j][k]);
      add[i * n + j] = find(key);
      for (std::size_t k = 0; k < rank; ++k) key[k] = tables[i](imgs[j][k]);
      mul[i * n + j] = find(key);
    }
  auto dec = decompose(n, [&](Elem a, Elem b) { return add[a * n + b]; });

  std::vector<Elem> cmul(n * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      cmul[i * n + j] = dec.from_label[mul[dec.to_label[i] * n + dec.to_label[j]]];
  std::vector<Elem> id_images(rank);
  for (std::size_t k = 0; k < rank; ++k) id_images[k] = m->group().generator(k);
  const Elem one = dec.from_label[find(id_images)];

  EndRing out;
  out.base = m;
  out.ring = std::make_shared<const FiniteRing>("End(" + m->label() + ")", dec.group, std::move(cmul), one);
  out.homs.reserve(n);
  for (Elem c = 0; c < n; ++c) {
    out.homs.push_back(tables[dec.to_label[c]]);
    out.lookup.emplace(imgs[dec.to_label[c]], c);
  }
  return out;
}

}  // namespace qhull
