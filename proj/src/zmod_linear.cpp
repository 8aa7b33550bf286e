#include "qhull/zmod_linear.hpp"

#include <utility>

#include "qhull/error.hpp"

namespace qhull {

namespace {

std::int64_t ipow(std::int64_t b, std::uint32_t e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::int64_t reduce(std::int64_t x, std::int64_t q) {
  x %= q;
  return x < 0 ? x + q : x;
}

}  // namespace

std::uint32_t valuation(std::int64_t x, std::uint32_t p, std::uint32_t e) {
  if (x == 0) return e;
  std::uint32_t v = 0;
  while (v < e && x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = reduce(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) fail(ErrorKind::InternalInconsistency, "inverse of non-unit");
  return reduce(old_s, m);
}

KernelBasis kernel_mod_prime_power(ZpeMatrix a, std::uint32_t p, std::uint32_t e) {
  const std::int64_t q = ipow(p, e);
  for (auto& v : a.data) v = reduce(v, q);
  const std::size_t n = a.cols;
  ZpeMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1;

  auto swap_cols = [&](ZpeMatrix& m, std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t r = 0; r < m.rows; ++r) std::swap(m.at(r, c1), m.at(r, c2));
  };
  // col_dst -= k * col_src
  auto col_axpy = [&](ZpeMatrix& m, std::size_t dst, std::size_t src, std::int64_t k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < m.rows; ++r)
      m.at(r, dst) = reduce(m.at(r, dst) - k * m.at(r, src), q);
  };

  std::vector<std::uint32_t> pivot_val;
  std::size_t t = 0;
  for (; t < a.rows && t < n; ++t) {
    std::size_t bi = a.rows, bj = n;
    std::uint32_t best = e;
    for (std::size_t i = t; i < a.rows && best > 0; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        const auto val = valuation(a.at(i, j), p, e);
        if (val < best) {
          best = val;
          bi = i;
          bj = j;
          if (best == 0) break;
        }
      }
    }
    if (bi == a.rows) break;
    if (bi != t)
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(t, c), a.at(bi, c));
    swap_cols(a, t, bj);
    swap_cols(v, t, bj);

    const std::int64_t pk = ipow(p, best);
    const std::int64_t unit = a.at(t, t) / pk;
    const std::int64_t uinv = inverse_mod(unit, q);
    for (std::size_t r = 0; r < a.rows; ++r) a.at(r, t) = reduce(a.at(r, t) * uinv, q);
    for (std::size_t r = 0; r < n; ++r) v.at(r, t) = reduce(v.at(r, t) * uinv, q);

    for (std::size_t j = t + 1; j < n; ++j) {
      const std::int64_t k = a.at(t, j) / pk;
      col_axpy(a, j, t, k);
      col_axpy(v, j, t, k);
    }
    for (std::size_t i = t + 1; i < a.rows; ++i) {
      const std::int64_t k = a.at(i, t) / pk;
      if (k == 0) continue;
      for (std::size_t c = t; c < n; ++c) a.at(i, c) = reduce(a.at(i, c) - k * a.at(t, c), q);
    }
    pivot_val.push_back(best);
  }

  KernelBasis out;
  for (std::size_t c = 0; c < n; ++c) {
    const std::uint32_t k = c < pivot_val.size() ? pivot_val[c] : e;
    if (k == 0) continue;
    const std::int64_t scale = ipow(p, e - k);
    std::vector<std::int64_t> g(n);
    for (std::size_t r = 0; r < n; ++r) g[r] = reduce(v.at(r, c) * scale, q);
    out.gens.push_back(std::move(g));
    out.orders.push_back(static_cast<std::uint64_t>(ipow(p, k)));
  }
  return out;
}

}  // namespace qhull
