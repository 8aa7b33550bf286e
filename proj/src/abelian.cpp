#include "qhull/abelian.hpp"

#include <algorithm>
#include <numeric>

#include "qhull/error.hpp"

namespace qhull {

namespace {

constexpr std::size_t kAddTableLimit = 256;

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(static_cast<std::uint32_t>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

}  // namespace

std::uint32_t smallest_prime(std::uint64_t n) {
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return static_cast<std::uint32_t>(p);
  return static_cast<std::uint32_t>(n);
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  const std::uint64_t p = smallest_prime(n);
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::size_t> canonical_factor_order(std::span<const std::uint32_t> factors) {
  std::vector<std::size_t> perm(factors.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const auto pa = smallest_prime(factors[a]);
    const auto pb = smallest_prime(factors[b]);
    if (pa != pb) return pa < pb;
    return factors[a] > factors[b];
  });
  return perm;
}

AbelianGroup::AbelianGroup(std::vector<std::uint32_t> factors) : factors_(std::move(factors)) {
  primes_.reserve(factors_.size());
  for (auto f : factors_) {
    if (!is_prime_power(f)) fail(ErrorKind::NotAGroup, "factor " + std::to_string(f) + " is not a prime power");
    primes_.push_back(smallest_prime(f));
  }
  for (std::size_t i = 1; i < factors_.size(); ++i) {
    const bool ordered = primes_[i - 1] < primes_[i] ||
                         (primes_[i - 1] == primes_[i] && factors_[i - 1] >= factors_[i]);
    if (!ordered) fail(ErrorKind::NotAGroup, "factors not in canonical order");
  }
  strides_.assign(factors_.size(), 1);
  order_ = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = order_;
    order_ *= factors_[i];
  }
  if (order_ <= kAddTableLimit) {
    add_table_.resize(order_ * order_);
    std::vector<std::uint32_t> ca(rank()), cb(rank());
    for (Elem a = 0; a < order_; ++a) {
      coords(a, ca);
      for (Elem b = 0; b < order_; ++b) {
        coords(b, cb);
        Elem r = 0;
        for (std::size_t i = 0; i < rank(); ++i)
          r += static_cast<Elem>(((ca[i] + cb[i]) % factors_[i]) * strides_[i]);
        add_table_[a * order_ + b] = r;
      }
    }
  }
}

std::uint64_t AbelianGroup::exponent() const {
  std::uint64_t e = 1;
  for (auto f : factors_) e = std::lcm(e, std::uint64_t{f});
  return e;
}

Elem AbelianGroup::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[a * order_ + b];
  Elem r = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::uint32_t f = factors_[i];
    const std::uint32_t da = a % f, db = b % f;
    a /= f;
    b /= f;
    std::uint32_t s = da + db;
    if (s >= f) s -= f;
    r += static_cast<Elem>(s * strides_[i]);
  }
  return r;
}

Elem AbelianGroup::neg(Elem a) const {
  Elem r = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::uint32_t f = factors_[i];
    const std::uint32_t d = a % f;
    a /= f;
    r += static_cast<Elem>(((f - d) % f) * strides_[i]);
  }
  return r;
}

Elem AbelianGroup::scale(std::int64_t k, Elem a) const {
  Elem r = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::int64_t f = factors_[i];
    const std::int64_t d = a % f;
    a /= static_cast<Elem>(f);
    r += static_cast<Elem>(mod_floor(mod_floor(k, f) * d, f) * static_cast<std::int64_t>(strides_[i]));
  }
  return r;
}

void AbelianGroup::coords(Elem a, std::span<std::uint32_t> out) const {
  for (std::size_t i = factors_.size(); i-- > 0;) {
    out[i] = a % factors_[i];
    a /= factors_[i];
  }
}

std::vector<std::uint32_t> AbelianGroup::coords(Elem a) const {
  std::vector<std::uint32_t> out(rank());
  coords(a, out);
  return out;
}

Elem AbelianGroup::from_coords(std::span<const std::int64_t> c) const {
  Elem r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r += static_cast<Elem>(mod_floor(c[i], factors_[i]) * static_cast<std::int64_t>(strides_[i]));
  return r;
}

Elem AbelianGroup::from_coords(std::span<const std::uint32_t> c) const {
  Elem r = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    r += static_cast<Elem>((c[i] % factors_[i]) * strides_[i]);
  return r;
}

std::uint64_t AbelianGroup::element_order(Elem a) const {
  std::uint64_t o = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const std::uint64_t f = factors_[i];
    const std::uint64_t d = a % f;
    a /= static_cast<Elem>(f);
    if (d != 0) o = std::lcm(o, f / std::gcd(f, d));
  }
  return o;
}

Decomposition decompose(std::size_t n, const std::function<Elem(Elem, Elem)>& add) {
  if (n == 0) fail(ErrorKind::NotAGroup, "empty element set");
  for (Elem x = 0; x < n; ++x) {
    if (add(0, x) != x || add(x, 0) != x)
      fail(ErrorKind::NotAGroup, "element 0 is not an identity (x=" + std::to_string(x) + ")");
  }
  auto times = [&](std::uint64_t k, Elem x) {
    Elem acc = 0, base = x;
    while (k > 0) {
      if (k & 1U) acc = add(acc, base);
      base = add(base, base);
      k >>= 1U;
    }
    return acc;
  };

  std::vector<std::uint64_t> ord(n, 0);
  for (Elem x = 0; x < n; ++x) {
    Elem y = x;
    std::uint64_t k = 1;
    while (y != 0) {
      y = add(y, x);
      if (++k > n) fail(ErrorKind::NotAGroup, "element " + std::to_string(x) + " has no finite order");
    }
    ord[x] = k;
  }

  std::vector<std::uint32_t> factors;
  std::vector<Elem> basis;
  for (std::uint32_t p : prime_factors(n)) {
    std::uint64_t p_part = 1;
    for (std::uint64_t m = n; m % p == 0; m /= p) p_part *= p;
    std::vector<Elem> members;
    for (Elem x = 0; x < n; ++x) {
      std::uint64_t o = ord[x];
      while (o % p == 0) o /= p;
      if (o == 1) members.push_back(x);
    }
    if (members.size() != p_part)
      fail(ErrorKind::NotAGroup, "Sylow " + std::to_string(p) + "-part has wrong size");

    // H grows as an internal direct sum of cyclic subgroups; hcoords holds
    // each member's coordinates with respect to the basis chosen so far.
    std::vector<std::int32_t> hpos(n, -1);
    std::vector<Elem> hlist{0};
    std::vector<std::vector<std::int64_t>> hcoords{{}};
    hpos[0] = 0;
    std::vector<Elem> pbasis;
    std::vector<std::uint64_t> porders;
    while (hlist.size() < members.size()) {
      Elem best = 0;
      std::uint64_t best_order = 0;
      for (Elem x : members) {
        if (hpos[x] >= 0) continue;
        Elem y = x;
        std::uint64_t o = 1;
        while (hpos[y] < 0) {
          y = times(p, y);
          o *= p;
        }
        if (o > best_order) {
          best_order = o;
          best = x;
        }
      }
      const Elem y = times(best_order, best);
      const auto& c = hcoords[static_cast<std::size_t>(hpos[y])];
      Elem adjusted = best;
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] % static_cast<std::int64_t>(best_order) != 0)
          fail(ErrorKind::NotAGroup, "inconsistent cyclic decomposition");
        const std::uint64_t q = static_cast<std::uint64_t>(c[i]) / best_order;
        const Elem term = times(q, pbasis[i]);
        adjusted = add(adjusted, times(porders[i] - 1, term));  // subtract term
      }
      if (ord[adjusted] != best_order) fail(ErrorKind::NotAGroup, "inconsistent cyclic decomposition");
      const std::size_t old = hlist.size();
      for (std::size_t h = 0; h < old; ++h) {
        Elem cur = hlist[h];
        for (std::uint64_t k = 1; k < best_order; ++k) {
          cur = add(cur, adjusted);
          if (hpos[cur] >= 0) fail(ErrorKind::NotAGroup, "cyclic factor meets earlier factors");
          hpos[cur] = static_cast<std::int32_t>(hlist.size());
          hlist.push_back(cur);
          auto cc = hcoords[h];
          cc.push_back(static_cast<std::int64_t>(k));
          hcoords.push_back(std::move(cc));
        }
      }
      for (std::size_t h = 0; h < old; ++h) hcoords[h].push_back(0);
      pbasis.push_back(adjusted);
      porders.push_back(best_order);
    }
    for (std::size_t i = 0; i < pbasis.size(); ++i) {
      basis.push_back(pbasis[i]);
      factors.push_back(static_cast<std::uint32_t>(porders[i]));
    }
  }

  Decomposition out{AbelianGroup(factors), {}, {}};
  const AbelianGroup& g = out.group;

  auto last_nonzero = [&](Elem idx) {
    for (std::size_t j = g.rank(); j-- > 0;)
      if (g.coord(idx, j) != 0) return j;
    return g.rank();
  };

  bool identity_ok = true;
  for (std::size_t j = 0; j < g.rank() && identity_ok; ++j)
    identity_ok = g.generator(j) < n && ord[g.generator(j)] == g.factor(j);
  for (Elem idx = 1; idx < n && identity_ok; ++idx) {
    const std::size_t j = last_nonzero(idx);
    identity_ok = add(idx - g.generator(j), g.generator(j)) == idx;
  }

  out.to_label.resize(n);
  out.from_label.assign(n, static_cast<Elem>(n));
  if (identity_ok) {
    std::iota(out.to_label.begin(), out.to_label.end(), Elem{0});
  } else {
    out.to_label[0] = 0;
    for (Elem idx = 1; idx < n; ++idx) {
      const std::size_t j = last_nonzero(idx);
      out.to_label[idx] = add(out.to_label[idx - g.generator(j)], basis[j]);
    }
  }
  for (Elem idx = 0; idx < n; ++idx) {
    const Elem l = out.to_label[idx];
    if (out.from_label[l] != n) fail(ErrorKind::NotAGroup, "decomposition is not bijective");
    out.from_label[l] = idx;
  }
  return out;
}

}  // namespace qhull
