#include "qhull/constructions.hpp"

#include "qhull/error.hpp"
#include "qhull/structure.hpp"

namespace qhull {

BuiltRing ring_from_operations(std::string name, std::size_t n, const std::function<Elem(Elem, Elem)>& add,
                               const std::function<Elem(Elem, Elem)>& mul, Elem one_label) {
  auto dec = decompose(n, add);
  std::vector<Elem> table(n * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) table[i * n + j] = dec.from_label[mul(dec.to_label[i], dec.to_label[j])];
  auto ring = std::make_shared<const FiniteRing>(std::move(name), dec.group, std::move(table), dec.from_label[one_label]);
  return {std::move(ring), std::move(dec.to_label), std::move(dec.from_label)};
}

RingPtr zmod(std::uint32_t n) {
  if (n < 2) fail(ErrorKind::ShapeMismatch, "Z/n needs n >= 2");
  return ring_from_operations(
             "Z/" + std::to_string(n), n, [n](Elem a, Elem b) { return (a + b) % n; },
             [n](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} * b) % n); }, 1)
      .ring;
}

namespace {

// Polynomials over F_p of degree < k, encoded base p (constant term least significant).
std::vector<std::uint32_t> digits(Elem x, std::uint32_t p, std::size_t k) {
  std::vector<std::uint32_t> d(k);
  for (std::size_t i = 0; i < k; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

Elem undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  Elem x = 0;
  for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
  return x;
}

// Monic modulus of degree k given by its lower coefficients; irreducible iff
// the quotient has no zero divisors.
std::vector<std::uint32_t> polymul_mod(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& low, std::uint32_t p) {
  const std::size_t k = low.size();
  std::vector<std::uint32_t> prod(2 * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * k - 1; d >= k; --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - low[i]) * c) % p;
  }
  prod.resize(k);
  return prod;
}

}  // namespace

RingPtr galois_field(std::uint32_t q) {
  if (!is_prime_power(q)) fail(ErrorKind::ShapeMismatch, "field order must be a prime power");
  const std::uint32_t p = smallest_prime(q);
  std::size_t k = 0;
  for (std::uint32_t t = q; t > 1; t /= p) ++k;
  if (k == 1) {
    auto r = zmod(q);
    return std::make_shared<const FiniteRing>("F" + std::to_string(q), r->group(), r->mul_table(), r->one());
  }
  for (Elem code = 0; code < q; ++code) {
    const auto low = digits(code, p, k);
    bool field = true;
    for (Elem a = 1; a < q && field; ++a)
      for (Elem b = 1; b < q; ++b)
        if (undigits(polymul_mod(digits(a, p, k), digits(b, p, k), low, p), p) == 0) {
          field = false;
          break;
        }
    if (!field) continue;
    return ring_from_operations(
               "F" + std::to_string(q), q,
               [&](Elem a, Elem b) {
                 auto da = digits(a, p, k), db = digits(b, p, k);
                 for (std::size_t i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
                 return undigits(da, p);
               },
               [&](Elem a, Elem b) { return undigits(polymul_mod(digits(a, p, k), digits(b, p, k), low, p), p); }, 1)
        .ring;
  }
  fail(ErrorKind::InternalInconsistency, "no irreducible polynomial found");
}

RingPtr product_ring(const RingPtr& a, const RingPtr& b) {
  const std::size_t nb = b->order();
  return ring_from_operations(
             a->name() + "x" + b->name(), a->order() * nb,
             [&](Elem x, Elem y) { return static_cast<Elem>(a->add(x / nb, y / nb) * nb + b->add(x % nb, y % nb)); },
             [&](Elem x, Elem y) { return static_cast<Elem>(a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb)); },
             static_cast<Elem>(a->one() * nb + b->one()))
      .ring;
}

Elem MatrixRing::index_of(const std::vector<Elem>& e) const {
  auto it = index.find(e);
  if (it == index.end()) fail(ErrorKind::NotFound, "matrix is not an element of " + ring->name());
  return it->second;
}

namespace {

MatrixRing build_matrix_ring(const RingPtr& base, std::size_t n, bool upper, std::string name) {
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = upper ? i : 0; j < n; ++j) free.emplace_back(i, j);
  const std::size_t b = base->order();
  std::size_t count = 1;
  for (std::size_t i = 0; i < free.size(); ++i) count *= b;

  auto decode = [&](Elem label) {
    std::vector<Elem> e(n * n, 0);
    for (std::size_t t = 0; t < free.size(); ++t) {
      e[free[t].first * n + free[t].second] = label % b;
      label /= static_cast<Elem>(b);
    }
    return e;
  };
  auto encode = [&](const std::vector<Elem>& e) {
    Elem label = 0;
    for (std::size_t t = free.size(); t-- > 0;) label = label * static_cast<Elem>(b) + e[free[t].first * n + free[t].second];
    return label;
  };
  auto add = [&](Elem x, Elem y) {
    auto ex = decode(x), ey = decode(y);
    for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = base->add(ex[i], ey[i]);
    return encode(ex);
  };
  auto mul = [&](Elem x, Elem y) {
    auto ex = decode(x), ey = decode(y);
    std::vector<Elem> ez(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) ez[i * n + j] = base->add(ez[i * n + j], base->mul(ex[i * n + l], ey[l * n + j]));
    return encode(ez);
  };
  std::vector<Elem> id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = base->one();
  auto built = ring_from_operations(std::move(name), count, add, mul, encode(id));

  MatrixRing out;
  out.ring = built.ring;
  out.base = base;
  out.n = n;
  out.entries.resize(count);
  for (Elem c = 0; c < count; ++c) {
    out.entries[c] = decode(built.to_label[c]);
    out.index.emplace(out.entries[c], c);
  }
  return out;
}

}  // namespace

MatrixRing matrix_ring(const RingPtr& base, std::size_t n) {
  return build_matrix_ring(base, n, false, "M" + std::to_string(n) + "(" + base->name() + ")");
}

MatrixRing upper_triangular_ring(const RingPtr& base, std::size_t n) {
  return build_matrix_ring(base, n, true, "T" + std::to_string(n) + "(" + base->name() + ")");
}

std::vector<Elem> matrix_inclusion(const MatrixRing& sub, const MatrixRing& full) {
  std::vector<Elem> map(sub.ring->order());
  for (Elem i = 0; i < map.size(); ++i) map[i] = full.index_of(sub.entries[i]);
  return map;
}

ModulePtr t2_bottom_row(const MatrixRing& t2) {
  const auto& f = *t2.base;
  const auto q = static_cast<Elem>(f.order());
  return build_module(
             t2.ring, q * q,
             [&](Elem u, Elem v) { return f.add(u / q, v / q) * q + f.add(u % q, v % q); },
             [&](Elem u, Elem r) {
               const auto& e = t2.entries[r];
               const Elem x = u / q, y = u % q;
               return f.mul(x, e[0]) * q + f.add(f.mul(x, e[1]), f.mul(y, e[3]));
             },
             "(0 0;F F)")
      .module;
}

ModulePtr t2_corner(const MatrixRing& t2) {
  const auto& f = *t2.base;
  return build_module(
             t2.ring, f.order(), [&](Elem u, Elem v) { return f.add(u, v); },
             [&](Elem u, Elem r) { return f.mul(u, t2.entries[r][3]); }, "(0 0;0 F)")
      .module;
}

ModulePtr cyclic_quotient(const RingPtr& ring, const std::vector<Elem>& ideal_members, std::string label) {
  auto r = regular_module(ring);
  return quotient_module(r, make_submodule(r, ideal_members), std::move(label)).module;
}

}  // namespace qhull
