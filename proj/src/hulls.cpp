#include "qhull/hulls.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "qhull/cache.hpp"
#include "qhull/error.hpp"

namespace qhull {

namespace {

struct CachedHull {
  ModulePtr hull;
  std::vector<Elem> embedding;
};

struct CachedFlag {
  bool value;
};

std::int64_t ipow(std::int64_t p, std::uint32_t e) {
  std::int64_t r = 1;
  while (e--) r *= p;
  return r;
}

std::uint32_t log_p(std::uint64_t q, std::uint32_t p) {
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  return e;
}

std::vector<Elem> ring_ideal_generators(const FiniteRing& r, const std::vector<Elem>& members) {
  std::vector<std::uint8_t> in(r.order(), 0);
  std::vector<Elem> span{0}, gens;
  in[0] = 1;
  for (auto x : members) {
    if (in[x]) continue;
    gens.push_back(x);
    const std::vector<Elem> old = span;
    for (Elem s = 0; s < r.order(); ++s) {
      const Elem c = r.mul(x, s);
      for (auto a : old) {
        const Elem t = r.add(a, c);
        if (!in[t]) {
          in[t] = 1;
          span.push_back(t);
        }
      }
    }
  }
  return gens;
}

std::vector<Elem> preimage_members(const RightModule& m, Elem x, const Submodule& n) {
  std::vector<Elem> out;
  for (Elem r = 0; r < m.ring()->order(); ++r)
    if (n.contains(m.act(x, r))) out.push_back(r);
  return out;
}

// Some nonzero y in `ys` with y·g = 0 for all generators g.
bool has_killer(const RightModule& k, const std::vector<Elem>& ys, const std::vector<Elem>& gens) {
  for (auto y : ys) {
    if (y == 0) continue;
    bool kills = true;
    for (auto g : gens)
      if (k.act(y, g) != 0) {
        kills = false;
        break;
      }
    if (kills) return true;
  }
  return false;
}

std::vector<Elem> all_of(const RightModule& m) {
  std::vector<Elem> v(m.order());
  for (Elem i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

// Positions of a submodule's members inside its submodule_as_module copy.
std::vector<Elem> inverse_inclusion(const SubmoduleModule& s) {
  std::vector<Elem> inv(s.inclusion.target()->order(), 0);
  for (Elem i = 0; i < s.module->order(); ++i) inv[s.inclusion(i)] = i;
  return inv;
}

HullResult hull_from_submodule(const ModulePtr& m, const ModuleHom& into_ambient, const Submodule& sub,
                               const std::string& label, HullKind kind) {
  auto sm = submodule_as_module(sub, label);
  auto inv = inverse_inclusion(sm);
  std::vector<Elem> emb(m->order());
  for (Elem x = 0; x < m->order(); ++x) emb[x] = inv[into_ambient(x)];
  return {sm.module, ModuleHom(m, sm.module, std::move(emb)), kind};
}

HullResult identity_hull(const ModulePtr& m, const std::string& label, HullKind kind) {
  auto copy = m->relabeled(label);
  std::vector<Elem> id(m->order());
  for (Elem i = 0; i < id.size(); ++i) id[i] = i;
  return {copy, ModuleHom(m, copy, std::move(id)), kind};
}

std::string serialize_hull(const CachedHull& h) {
  std::ostringstream out;
  out << "label " << h.hull->label() << "\nfactors";
  for (auto q : h.hull->invariant_factors()) out << ' ' << q;
  out << "\nact";
  for (auto x : h.hull->act_table()) out << ' ' << x;
  out << "\nembed";
  for (auto x : h.embedding) out << ' ' << x;
  out << '\n';
  return out.str();
}

std::optional<CachedHull> parse_hull(const std::string& text, const RingPtr& ring) {
  std::istringstream in(text);
  std::string line, word, label;
  std::vector<std::uint32_t> factors;
  std::vector<Elem> act, embed;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    ls >> word;
    if (word == "label") {
      std::getline(ls >> std::ws, label);
    } else {
      std::vector<Elem>* target = word == "factors" ? nullptr : word == "act" ? &act : &embed;
      Elem v;
      while (ls >> v) (target ? target->push_back(v) : factors.push_back(v));
    }
  }
  AbelianGroup g(factors);
  if (act.size() != g.order() * ring->order()) return std::nullopt;
  return CachedHull{std::make_shared<const RightModule>(ring, g, std::move(act), label), std::move(embed)};
}

// The coinduced module I = Hom_Z(R, C) together with M ↪ I, where C is a sum
// of cyclic groups Z/p^e (p^e the exact power of p in char R), one copy per
// dimension of the p-socle of M.
struct Coinduced {
  BuiltModule module;
  std::vector<Elem> embedding;  // canonical indices in module.module
};

Coinduced coinduced_envelope(const ModulePtr& m, const Context& ctx) {
  const auto& ring = *m->ring();
  const auto& gm = m->group();
  const auto& gr = ring.group();
  const std::uint64_t n = ring.characteristic();
  const Submodule soc = socle(m);

  struct Copy {
    std::uint32_t p, e;
    std::size_t factor;  // coordinate character of M used on this copy
  };
  std::vector<Copy> copies;
  std::vector<std::uint32_t> primes;
  for (std::size_t k = 0; k < gm.rank(); ++k)
    if (primes.empty() || primes.back() != gm.prime(k)) primes.push_back(gm.prime(k));
  for (auto p : primes) {
    const std::uint32_t e = log_p(n, p);
    std::vector<std::size_t> ks;
    for (std::size_t k = 0; k < gm.rank(); ++k)
      if (gm.prime(k) == p) ks.push_back(k);
    // F_p-basis of the p-socle.
    std::vector<Elem> basis;
    std::vector<std::uint8_t> span(m->order(), 0);
    std::vector<Elem> span_list{0};
    span[0] = 1;
    for (auto x : soc.members()) {
      if (span[x] || m->scale(p, x) != 0) continue;
      basis.push_back(x);
      const std::vector<Elem> old = span_list;
      for (std::uint32_t c = 1; c < p; ++c)
        for (auto s : old) {
          const Elem t = m->add(s, m->scale(c, x));
          if (!span[t]) {
            span[t] = 1;
            span_list.push_back(t);
          }
        }
    }
    // Greedy choice of coordinate characters independent on the p-socle.
    std::vector<std::vector<std::int64_t>> reduced;
    std::vector<std::size_t> pivots;
    for (auto k : ks) {
      if (reduced.size() == basis.size()) break;
      const std::uint32_t a = log_p(gm.factor(k), p);
      std::vector<std::int64_t> row(basis.size());
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::int64_t chi = static_cast<std::int64_t>(gm.coord(basis[b], k)) * ipow(p, e - a);
        row[b] = (chi / ipow(p, e - 1)) % p;
      }
      for (std::size_t t = 0; t < reduced.size(); ++t) {
        const std::int64_t c = row[pivots[t]];
        if (c == 0) continue;
        for (std::size_t b = 0; b < row.size(); ++b) row[b] = ((row[b] - c * reduced[t][b]) % p + p) % p;
      }
      std::size_t piv = 0;
      while (piv < row.size() && row[piv] == 0) ++piv;
      if (piv == row.size()) continue;
      const std::int64_t inv = [&] {
        for (std::int64_t v = 1; v < p; ++v)
          if (v * row[piv] % p == 1) return v;
        return std::int64_t{1};
      }();
      for (auto& v : row) v = v * inv % p;
      for (std::size_t t = 0; t < reduced.size(); ++t) {
        const std::int64_t c = reduced[t][piv];
        if (c == 0) continue;
        for (std::size_t b = 0; b < row.size(); ++b) reduced[t][b] = ((reduced[t][b] - c * row[b]) % p + p) % p;
      }
      reduced.push_back(std::move(row));
      pivots.push_back(piv);
      copies.push_back({p, e, k});
    }
    if (reduced.size() != basis.size()) fail(ErrorKind::InternalInconsistency, "socle characters not independent");
  }

  // Factors of I: pairs (ring generator j, copy c) of the same prime.
  struct Factor {
    std::size_t j, c;
    std::uint32_t order;
    std::int64_t shift;  // value in Z/p^e is digit·shift
  };
  std::vector<Factor> factors;
  std::uint64_t size = 1;
  for (std::size_t j = 0; j < gr.rank(); ++j)
    for (std::size_t c = 0; c < copies.size(); ++c) {
      if (gr.prime(j) != copies[c].p) continue;
      const std::uint32_t alpha = log_p(gr.factor(j), copies[c].p);
      const std::uint32_t mn = std::min(alpha, copies[c].e);
      factors.push_back({j, c, static_cast<std::uint32_t>(ipow(copies[c].p, mn)), ipow(copies[c].p, copies[c].e - mn)});
      size *= factors.back().order;
      if (size > ctx.config.max_module_order) throw CapExceeded("injective envelope order", ctx.config.max_module_order);
    }

  std::vector<std::uint64_t> stride(factors.size());
  {
    std::uint64_t s = 1;
    for (std::size_t f = factors.size(); f-- > 0;) {
      stride[f] = s;
      s *= factors[f].order;
    }
  }
  auto digit = [&](Elem label, std::size_t f) { return static_cast<std::int64_t>((label / stride[f]) % factors[f].order); };
  // f(s) in copy c for ring element s.
  auto evaluate = [&](Elem label, Elem s, std::size_t c) {
    const std::int64_t q = ipow(copies[c].p, copies[c].e);
    std::int64_t v = 0;
    for (std::size_t f = 0; f < factors.size(); ++f)
      if (factors[f].c == c) v += static_cast<std::int64_t>(gr.coord(s, factors[f].j)) * digit(label, f) * factors[f].shift;
    return ((v % q) + q) % q;
  };
  auto encode = [&](const std::function<std::int64_t(std::size_t j, std::size_t c)>& value) {
    Elem label = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const std::int64_t v = value(factors[f].j, factors[f].c);
      if (v % factors[f].shift != 0) fail(ErrorKind::InternalInconsistency, "value outside the factor");
      label += static_cast<Elem>((v / factors[f].shift) % factors[f].order * stride[f]);
    }
    return label;
  };
  const auto rgens = ring.additive_generators();
  auto add = [&](Elem a, Elem b) {
    Elem label = 0;
    for (std::size_t f = 0; f < factors.size(); ++f)
      label += static_cast<Elem>((digit(a, f) + digit(b, f)) % factors[f].order * stride[f]);
    return label;
  };
  auto act = [&](Elem a, Elem r) {
    return encode([&](std::size_t j, std::size_t c) { return evaluate(a, ring.mul(r, rgens[j]), c); });
  };
  Coinduced out{build_module(m->ring(), size, add, act, "I"), {}};

  auto character = [&](Elem x, std::size_t c) {
    const auto& cp = copies[c];
    const std::uint32_t a = log_p(gm.factor(cp.factor), cp.p);
    return static_cast<std::int64_t>(gm.coord(x, cp.factor)) * ipow(cp.p, cp.e - a);
  };
  out.embedding.resize(m->order());
  for (Elem x = 0; x < m->order(); ++x)
    out.embedding[x] =
        out.module.from_label[encode([&](std::size_t j, std::size_t c) { return character(m->act(x, rgens[j]), c); })];
  return out;
}

template <typename T, typename F>
std::shared_ptr<const T> cached(const Context& ctx, const RightModule& m, const std::string& op, F&& compute) {
  if (!ctx.cache) return std::make_shared<const T>(compute());
  const auto key = cache_key(m, op, ctx.config);
  if (auto hit = ctx.cache->get<T>(key)) return hit;
  auto value = std::make_shared<const T>(compute());
  ctx.cache->put<T>(key, value);
  return value;
}

}  // namespace

bool is_injective(const ModulePtr& m, const Context& ctx) {
  return cached<CachedFlag>(ctx, *m, "injective?", [&] {
           if (m->order() == 1) return CachedFlag{true};
           auto r = regular_module(m->ring());
           for (const auto& j : enumerate_submodules(r, ctx.config.max_lattice)) {
             if (j.is_zero() || j.is_whole()) continue;
             const auto count = hom_count(submodule_as_module(j, "J").module, m);
             const auto ann = module_annihilator(m, j).size();
             if (count * ann != m->order()) return CachedFlag{false};
           }
           return CachedFlag{true};
         })
      ->value;
}

HullResult injective_hull(const ModulePtr& m, const Context& ctx) {
  const std::string label = "E(" + m->label() + ")";
  auto compute = [&]() -> CachedHull {
    if (is_injective(m, ctx)) {
      auto h = identity_hull(m, label, HullKind::Injective);
      return {h.hull, h.embedding.table()};
    }
    auto env = coinduced_envelope(m, ctx);
    const auto& i = env.module.module;
    std::vector<Elem> img = env.embedding;
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    if (img.size() != m->order()) fail(ErrorKind::InternalInconsistency, "envelope map is not injective");
    const Submodule base(i, img);

    std::vector<std::uint8_t> good(i->order(), 0);
    for (Elem y = 1; y < i->order(); ++y)
      for (Elem r = 0; r < i->ring()->order(); ++r) {
        const Elem z = i->act(y, r);
        if (z != 0 && base.contains(z)) {
          good[y] = 1;
          break;
        }
      }
    Submodule e = base;
    for (Elem x = 1; x < i->order(); ++x) {
      if (e.contains(x) || !good[x]) continue;
      auto s = submodule_sum(e, cyclic_submodule(i, x));
      bool essential = true;
      for (auto z : s.members())
        if (z != 0 && !good[z]) {
          essential = false;
          break;
        }
      if (essential) e = std::move(s);
    }
    if (ctx.config.debug_crosscheck)
      for (Elem x = 1; x < i->order(); ++x) {
        if (e.contains(x)) continue;
        const auto s = submodule_sum(e, cyclic_submodule(i, x));
        if (std::all_of(s.members().begin() + 1, s.members().end(), [&](Elem z) { return good[z] != 0; }))
          fail(ErrorKind::InternalInconsistency, "essential extension is not maximal");
      }
    auto h =hull_from_submodule(m, ModuleHom(m, i, env.embedding), e, label, HullKind::Injective);
    if (!is_injective(h.hull, ctx)) fail(ErrorKind::InternalInconsistency, "maximal essential extension is not injective");
    return {h.hull, h.embedding.table()};
  };

  std::shared_ptr<const CachedHull> result;
  if (ctx.cache) {
    const auto key = cache_key(*m, "E", ctx.config);
    result = ctx.cache->get<CachedHull>(key);
    if (!result) {
      if (auto text = ctx.cache->load_text(key)) {
        if (auto parsed = parse_hull(*text, m->ring()); parsed && parsed->embedding.size() == m->order())
          result = std::make_shared<const CachedHull>(std::move(*parsed));
      }
      if (!result) {
        result = std::make_shared<const CachedHull>(compute());
        ctx.cache->save_text(key, serialize_hull(*result));
      }
      ctx.cache->put<CachedHull>(key, result);
    }
  } else {
    result = std::make_shared<const CachedHull>(compute());
  }
  return {result->hull, ModuleHom(m, result->hull, result->embedding), HullKind::Injective};
}

Submodule rational_hull_within(const Submodule& m_image) {
  const auto& e = m_image.ambient();
  const auto& ring = *e->ring();
  std::map<std::vector<Elem>, bool> memo;
  std::vector<std::int8_t> good(e->order(), -1);
  auto is_good = [&](Elem y) {
    if (good[y] < 0) {
      auto d = preimage_members(*e, y, m_image);
      auto it = memo.find(d);
      if (it == memo.end())
        it = memo.emplace(d, !has_killer(*e, m_image.members(), ring_ideal_generators(ring, d))).first;
      good[y] = it->second ? 1 : 0;
    }
    return good[y] == 1;
  };
  std::vector<Elem> out;
  for (Elem x = 0; x < e->order(); ++x) {
    bool in = true;
    for (Elem r = 0; r < ring.order() && in; ++r) in = is_good(e->act(x, r));
    if (in) out.push_back(x);
  }
  return Submodule(e, std::move(out));
}

const std::vector<RationalFormula>& all_rational_formulas() {
  static const std::vector<RationalFormula> all{RationalFormula::Annihilator, RationalFormula::ElementScan,
                                                RationalFormula::RelativeDensity, RationalFormula::QuotientHoms,
                                                RationalFormula::IdealAnnihilator};
  return all;
}

const char* formula_name(RationalFormula f) {
  switch (f) {
    case RationalFormula::Annihilator: return "A:r_E(l_T(M))";
    case RationalFormula::ElementScan: return "B:y.x^-1M!=0";
    case RationalFormula::RelativeDensity: return "C:x^-1M<=den_M R";
    case RationalFormula::QuotientHoms: return "D:Hom(R/x^-1M,E)=0";
    case RationalFormula::IdealAnnihilator: return "E:l_E(x^-1M)=0";
  }
  return "?";
}

Submodule rational_hull_by(RationalFormula f, const Submodule& m_image, const Context& ctx) {
  const auto& e = m_image.ambient();
  const auto& ringp = e->ring();
  const auto& ring = *ringp;
  std::vector<Elem> out;
  if (f == RationalFormula::Annihilator) {
    auto q = quotient_module(e, m_image, "E/M");
    const auto hs = hom_group(q.module, e);
    std::vector<ModuleHom> vanishing;
    for (std::size_t i = 0; i < hs.basis_size(); ++i) vanishing.push_back(compose(hs.basis_hom(i), q.projection));
    return common_kernel(e, vanishing);
  }
  const auto regular = regular_module(ringp);
  const auto es = all_of(*e);
  ModulePtr m_module;
  if (f == RationalFormula::RelativeDensity) m_module = submodule_as_module(m_image, "M").module;
  std::map<std::vector<Elem>, bool> memo;
  for (Elem x = 0; x < e->order(); ++x) {
    auto d = preimage_members(*e, x, m_image);
    auto it = memo.find(d);
    if (it == memo.end()) {
      bool in = true;
      switch (f) {
        case RationalFormula::ElementScan:
          for (Elem y = 1; y < e->order() && in; ++y) {
            bool moves = false;
            for (auto r : d)
              if (e->act(y, r) != 0) {
                moves = true;
                break;
              }
            in = moves;
          }
          break;
        case RationalFormula::RelativeDensity:
          in = rel_dense_in(Submodule(regular, d), whole_submodule(regular), m_module).answer;
          break;
        case RationalFormula::QuotientHoms:
          in = hom_count(quotient_module(regular, Submodule(regular, d), "R/I").module, e) == 1;
          break;
        case RationalFormula::IdealAnnihilator:
          in = !has_killer(*e, es, submodule_generators(Submodule(regular, d)));
          break;
        case RationalFormula::Annihilator:
          break;
      }
      it = memo.emplace(std::move(d), in).first;
    }
    if (it->second) out.push_back(x);
  }
  (void)ctx;
  (void)ring;
  return Submodule(e, std::move(out));
}

Submodule rational_hull_by_fixed_points(const Submodule& m_image, const Context& ctx) {
  const auto& e = m_image.ambient();
  const auto hs = hom_group(e, e);
  if (hs.size() > ctx.config.max_hom_maps) throw CapExceeded("End(E) enumeration", ctx.config.max_hom_maps);
  std::vector<std::uint8_t> fixed(e->order(), 1);
  for (std::uint64_t i = 0; i < hs.size(); ++i) {
    auto theta = hs.at(i);
    bool identity_on_m = true;
    for (auto x : m_image.members())
      if (theta(x) != x) {
        identity_on_m = false;
        break;
      }
    if (!identity_on_m) continue;
    for (Elem x = 0; x < e->order(); ++x)
      if (theta(x) != x) fixed[x] = 0;
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < e->order(); ++x)
    if (fixed[x]) out.push_back(x);
  return Submodule(e, std::move(out));
}

HullResult rational_hull(const ModulePtr& m, const Context& ctx) {
  const auto inj = injective_hull(m, ctx);
  const auto img = inj.image();
  auto sub = rational_hull_within(img);
  if (!img.subset_of(sub)) fail(ErrorKind::InternalInconsistency, "rational hull misses M");
  if (ctx.config.debug_crosscheck) {
    for (auto f : all_rational_formulas())
      if (!(rational_hull_by(f, img, ctx) == sub))
        fail(ErrorKind::InternalInconsistency, std::string("rational hull formula disagrees: ") + formula_name(f));
    make_submodule(sub.ambient(), sub.members());
  }
  return hull_from_submodule(m, inj.embedding, sub, "~E(" + m->label() + ")", HullKind::Rational);
}

HullResult quasi_injective_hull(const ModulePtr& m, const Context& ctx) {
  const auto inj = injective_hull(m, ctx);
  const auto img = inj.image();
  const auto& e = inj.hull;
  const auto hs = hom_group(e, e);
  auto gens = submodule_generators(img);
  std::vector<Elem> all = gens;
  for (std::size_t i = 0; i < hs.basis_size(); ++i) {
    auto b = hs.basis_hom(i);
    for (auto g : gens) all.push_back(b(g));
  }
  auto w = submodule_generated(e, all);
  auto h = hull_from_submodule(m, inj.embedding, w, "^" + m->label(), HullKind::QuasiInjective);
  if (ctx.config.debug_crosscheck && !is_quasi_injective(h.hull, ctx.with_debug(false)))
    fail(ErrorKind::InternalInconsistency, "T·M is not quasi-injective");
  return h;
}

bool is_rationally_complete(const ModulePtr& m, const Context& ctx) {
  const bool answer = rational_hull(m, ctx).hull->order() == m->order();
  if (ctx.config.debug_crosscheck) {
    const auto plain = ctx.with_debug(false);
    if (rationally_complete_by_cosets(m, plain) != answer || rationally_complete_by_extension(m, plain) != answer)
      fail(ErrorKind::InternalInconsistency, "rational completeness criteria disagree");
  }
  return answer;
}

bool rationally_complete_by_cosets(const ModulePtr& m, const Context& ctx) {
  const auto inj = injective_hull(m, ctx);
  const auto img = inj.image();
  const auto& e = *inj.hull;
  const auto es = all_of(e);
  for (Elem x = 0; x < e.order(); ++x) {
    if (img.contains(x)) continue;
    if (!has_killer(e, es, ring_ideal_generators(*e.ring(), preimage_members(e, x, img)))) return false;
  }
  return true;
}

bool rationally_complete_by_extension(const ModulePtr& m, const Context& ctx) {
  auto r = regular_module(m->ring());
  const auto whole = whole_submodule(r);
  for (const auto& i : enumerate_submodules(r, ctx.config.max_lattice)) {
    if (!rel_dense_in(i, whole, m).answer) continue;
    const auto count = hom_count(submodule_as_module(i, "I").module, m);
    const auto ann = module_annihilator(m, i).size();
    if (ann != 1 || count != m->order()) return false;
  }
  return true;
}

bool is_quasi_injective(const ModulePtr& m, const Context& ctx) {
  return cached<CachedFlag>(ctx, *m, "qi?", [&] {
           const auto inj = injective_hull(m, ctx);
           const auto img = inj.image();
           const auto hs = hom_group(inj.hull, inj.hull);
           const auto gens = submodule_generators(img);
           for (std::size_t i = 0; i < hs.basis_size(); ++i) {
             auto b = hs.basis_hom(i);
             for (auto g : gens)
               if (!img.contains(b(g))) return CachedFlag{false};
           }
           return CachedFlag{true};
         })
      ->value;
}

bool is_quasi_continuous(const ModulePtr& m, const Context& ctx) {
  return cached<CachedFlag>(ctx, *m, "qc?", [&] {
           const auto inj = injective_hull(m, ctx);
           const auto img = inj.image();
           const auto& e = inj.hull;
           const auto hs = hom_group(e, e);
           if (hs.size() > ctx.config.max_hom_maps) throw CapExceeded("End(E) enumeration", ctx.config.max_hom_maps);
           const auto gens = submodule_generators(img);
           for (std::uint64_t i = 0; i < hs.size(); ++i) {
             const auto f = hs.at(i);
             bool idem = true;
             for (std::size_t k = 0; k < e->group().rank() && idem; ++k) {
               const Elem g = e->group().generator(k);
               idem = f(f(g)) == f(g);
             }
             if (!idem) continue;
             for (auto g : gens)
               if (!img.contains(f(g))) return CachedFlag{false};
           }
           return CachedFlag{true};
         })
      ->value;
}

std::vector<Submodule> direct_summands(const ModulePtr& m, const Context& ctx) {
  const auto hs = hom_group(m, m);
  if (hs.size() > ctx.config.max_hom_maps) throw CapExceeded("End(M) enumeration", ctx.config.max_hom_maps);
  std::set<std::vector<Elem>> seen;
  std::vector<Submodule> out;
  for (std::uint64_t i = 0; i < hs.size(); ++i) {
    const auto f = hs.at(i);
    bool idem = true;
    for (std::size_t k = 0; k < m->group().rank() && idem; ++k) {
      const Elem g = m->group().generator(k);
      idem = f(f(g)) == f(g);
    }
    if (!idem) continue;
    auto im = image(f);
    if (seen.insert(im.members()).second) out.push_back(std::move(im));
  }
  std::sort(out.begin(), out.end(), [](const Submodule& a, const Submodule& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

bool is_extending(const ModulePtr& m, const Context& ctx) {
  return cached<CachedFlag>(ctx, *m, "ext?", [&] {
           const auto summands = direct_summands(m, ctx);
           for (const auto& n : enumerate_submodules(m, ctx.config.max_lattice)) {
             bool covered = false;
             for (const auto& d : summands)
               if (n.subset_of(d) && essential_in(n, d).answer) {
                 covered = true;
                 break;
               }
             if (!covered) return CachedFlag{false};
           }
           return CachedFlag{true};
         })
      ->value;
}

bool is_continuous(const ModulePtr& m, const Context& ctx) {
  return cached<CachedFlag>(ctx, *m, "cont?", [&] {
           if (!is_extending(m, ctx)) return CachedFlag{false};
           const auto summands = direct_summands(m, ctx);
           std::set<std::vector<Elem>> summand_sets;
           for (const auto& d : summands) summand_sets.insert(d.members());
           for (const auto& d : summands) {
             auto sm = submodule_as_module(d, "D");
             const auto hs = hom_group(sm.module, m);
             if (hs.size() > ctx.config.max_hom_maps) throw CapExceeded("Hom(D, M) enumeration", ctx.config.max_hom_maps);
             for (std::uint64_t i = 0; i < hs.size(); ++i) {
               const auto f = hs.at(i);
               if (f.is_injective() && !summand_sets.count(image(f).members())) return CachedFlag{false};
             }
           }
           return CachedFlag{true};
         })
      ->value;
}

bool is_polyform(const ModulePtr& m, const Context& ctx) {
  return cached<CachedFlag>(ctx, *m, "poly?", [&] {
           const auto whole = whole_submodule(m);
           for (const auto& n : enumerate_submodules(m, ctx.config.max_lattice))
             if (essential_in(n, whole).answer && !dense_in(n, whole).answer) return CachedFlag{false};
           return CachedFlag{true};
         })
      ->value;
}

Submodule singular_submodule(const ModulePtr& m) {
  auto r = regular_module(m->ring());
  const auto whole = whole_submodule(r);
  std::map<std::vector<Elem>, bool> memo;
  std::vector<Elem> out;
  for (Elem x = 0; x < m->order(); ++x) {
    std::vector<Elem> ann;
    for (Elem s = 0; s < r->order(); ++s)
      if (m->act(x, s) == 0) ann.push_back(s);
    auto it = memo.find(ann);
    if (it == memo.end()) {
      const bool ess = essential_in(Submodule(r, ann), whole).answer;
      it = memo.emplace(std::move(ann), ess).first;
    }
    if (it->second) out.push_back(x);
  }
  return Submodule(m, std::move(out));
}

bool is_nonsingular(const ModulePtr& m, const Context&) { return singular_submodule(m).is_zero(); }

ExtendedHom extend_hom(const SubmoduleModule& n, const ModuleHom& phi, const Context& ctx) {
  if (!same_module(*phi.source(), *n.module)) fail(ErrorKind::ShapeMismatch, "φ must start at N");
  const auto& m = n.inclusion.target();
  const auto& k = phi.target();
  const auto n_sub = image(n.inclusion);
  auto dense = rel_dense_in(n_sub, whole_submodule(m), k);
  if (!dense.answer) fail(ErrorKind::PreconditionFailed, "N is not K-dense in M");
  auto kh = rational_hull(k, ctx);
  std::vector<std::pair<Elem, Elem>> constraints;
  for (Elem i = 0; i < n.module->order(); ++i) constraints.emplace_back(n.inclusion(i), kh.embedding(phi(i)));

  const auto hs = hom_group(m, kh.hull);
  if (hs.size() > ctx.config.max_hom_maps) throw CapExceeded("Hom(M, ~E(K)) enumeration", ctx.config.max_hom_maps);
  std::optional<ModuleHom> found;
  for (std::uint64_t i = 0; i < hs.size(); ++i) {
    auto f = hs.at(i);
    bool matches = true;
    for (auto [x, y] : constraints)
      if (f(x) != y) {
        matches = false;
        break;
      }
    if (!matches) continue;
    if (found) fail(ErrorKind::NonUnique, "two extensions agree on N");
    found = std::move(f);
  }
  if (!found) fail(ErrorKind::NotFound, "no extension into the rational hull");
  const bool image_dense = dense_in(image_of(*found, n_sub), image(*found)).answer;
  return {*found, std::move(kh), image_dense};
}

EndOfHull end_of_hull(const ModulePtr& m, const Context& ctx) {
  const auto inj = injective_hull(m, ctx);
  EndOfHull out{end_ring(inj.hull, ctx), {}};
  const auto whole = whole_submodule(inj.hull);
  for (Elem a = 0; a < out.t.homs.size(); ++a)
    if (essential_in(kernel(out.t.homs[a]), whole).answer) out.jacobson.push_back(a);
  return out;
}

DirectSumHullReport direct_sum_hull_check(const std::vector<ModulePtr>& parts, const Context& ctx) {
  if (parts.empty()) fail(ErrorKind::ShapeMismatch, "empty list");
  std::vector<HullResult> inj, rat;
  std::vector<ModulePtr> hulls;
  for (const auto& p : parts) {
    inj.push_back(injective_hull(p, ctx));
    rat.push_back(rational_hull(p, ctx));
    hulls.push_back(inj.back().hull);
  }
  auto sum_e = direct_sum(hulls, "E(+)");
  const auto& e = sum_e.module;
  // Image of ⊕M_k and of ⊕Ẽ(M_k) inside ⊕E(M_k).
  std::vector<Elem> m_gens, rat_gens;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (auto g : submodule_generators(inj[k].image())) m_gens.push_back(sum_e.injections[k](g));
    auto rt = rational_hull_within(inj[k].image());
    for (auto g : submodule_generators(rt)) rat_gens.push_back(sum_e.injections[k](g));
  }
  const auto m_img = submodule_generated(e, m_gens);
  const auto sum_of_hulls = submodule_generated(e, rat_gens);
  const auto hull_of_sum = rational_hull_within(m_img);

  DirectSumHullReport out;
  out.sum_hull_order = hull_of_sum.size();
  out.sum_of_hulls_order = sum_of_hulls.size();
  out.contained = hull_of_sum.subset_of(sum_of_hulls);
  out.equal = hull_of_sum == sum_of_hulls;
  out.all_pairwise = true;
  out.pairwise.assign(parts.size(), std::vector<bool>(parts.size(), false));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto rt = rational_hull_within(inj[i].image());
    for (std::size_t j = 0; j < parts.size(); ++j) {
      out.pairwise[i][j] = rel_dense_in(inj[i].image(), rt, parts[j]).answer;
      out.all_pairwise = out.all_pairwise && out.pairwise[i][j];
    }
  }
  out.biconditional_holds = out.equal == out.all_pairwise;
  return out;
}

}  // namespace qhull
