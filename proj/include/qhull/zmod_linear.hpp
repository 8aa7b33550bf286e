#pragma once

#include <cstdint>
#include <vector>

namespace qhull {

/// Dense matrix over Z/p^e, entries kept reduced.
struct ZpeMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  ZpeMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  std::int64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Independent cyclic generators of a kernel: every kernel vector is
/// uniquely sum_i c_i * gens[i] with 0 <= c_i < orders[i].
struct KernelBasis {
  std::vector<std::vector<std::int64_t>> gens;
  std::vector<std::uint64_t> orders;
};

/// Kernel {x in (Z/p^e)^cols : A x = 0} via Smith reduction over the local
/// ring Z/p^e. Generators of order 1 are dropped.
KernelBasis kernel_mod_prime_power(ZpeMatrix a, std::uint32_t p, std::uint32_t e);

/// p-adic valuation of x modulo p^e (returns e for x == 0).
std::uint32_t valuation(std::int64_t x, std::uint32_t p, std::uint32_t e);

/// Inverse of a unit modulo m.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

}  // namespace qhull
