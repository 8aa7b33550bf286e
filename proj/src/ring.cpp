#include "qhull/ring.hpp"

#include <algorithm>

#include "qhull/error.hpp"

namespace qhull {

namespace {

std::string triple(Elem a, Elem b, Elem c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

std::uint64_t additive_order(const AbelianGroup& g, Elem x) { return g.element_order(x); }

}  // namespace

FiniteRing::FiniteRing(std::string name, AbelianGroup group, std::vector<Elem> mul, Elem one)
    : name_(std::move(name)), group_(std::move(group)), mul_(std::move(mul)), one_(one) {
  if (mul_.size() != order() * order()) fail(ErrorKind::ShapeMismatch, "multiplication table size");
  if (one_ >= order()) fail(ErrorKind::NoUnity, "unity index out of range");
  char_ = additive_order(group_, one_);
}

std::vector<Elem> FiniteRing::additive_generators() const {
  std::vector<Elem> out;
  for (std::size_t i = 0; i < group_.rank(); ++i) out.push_back(group_.generator(i));
  return out;
}

bool FiniteRing::is_commutative() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = a + 1; b < order(); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void check_ring_axioms(const FiniteRing& r) {
  const std::size_t n = r.order();
  for (Elem x = 0; x < n; ++x)
    if (r.mul(r.one(), x) != x || r.mul(x, r.one()) != x)
      fail(ErrorKind::NoUnity, "unity fails at element " + std::to_string(x));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)) ||
            r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
          fail(ErrorKind::NotDistributive, "triple " + triple(a, b, c));
      }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = r.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (r.mul(ab, c) != r.mul(a, r.mul(b, c)))
          fail(ErrorKind::NotAssociative, "triple " + triple(a, b, c));
    }
}

ValidatedRing validate_ring_labeled(std::string name, const std::vector<std::vector<Elem>>& add,
                                    const std::vector<std::vector<Elem>>& mul, Elem one) {
  const std::size_t n = add.size();
  if (n == 0 || mul.size() != n) fail(ErrorKind::ShapeMismatch, "tables must be square and of equal order");
  for (std::size_t i = 0; i < n; ++i) {
    if (add[i].size() != n || mul[i].size() != n) fail(ErrorKind::ShapeMismatch, "row " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (add[i][j] >= n || mul[i][j] >= n)
        fail(ErrorKind::ShapeMismatch, "index out of range at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
  }
  if (one >= n) fail(ErrorKind::NoUnity, "unity index out of range");

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (add[a][b] != add[b][a]) fail(ErrorKind::NotAGroup, "addition not commutative at " + triple(a, b, 0));
  auto dec = decompose(n, [&](Elem a, Elem b) { return add[a][b]; });
  const auto& g = dec.group;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (dec.from_label[add[a][b]] != g.add(dec.from_label[a], dec.from_label[b]))
        fail(ErrorKind::NotAGroup, "addition table inconsistent at " + triple(a, b, add[a][b]));

  for (Elem x = 0; x < n; ++x)
    if (mul[one][x] != x || mul[x][one] != x) fail(ErrorKind::NoUnity, "unity fails at element " + std::to_string(x));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] || mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]])
          fail(ErrorKind::NotDistributive, "triple " + triple(a, b, c));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]]) fail(ErrorKind::NotAssociative, "triple " + triple(a, b, c));

  std::vector<Elem> table(n * n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      table[i * n + j] = dec.from_label[mul[dec.to_label[i]][dec.to_label[j]]];
  auto ring = std::make_shared<const FiniteRing>(std::move(name), g, std::move(table), dec.from_label[one]);
  return {std::move(ring), std::move(dec.from_label)};
}

RingPtr validate_ring(std::string name, const std::vector<std::vector<Elem>>& add,
                      const std::vector<std::vector<Elem>>& mul, Elem one) {
  return validate_ring_labeled(std::move(name), add, mul, one).ring;
}

bool same_ring(const FiniteRing& a, const FiniteRing& b) {
  return &a == &b || (a.group() == b.group() && a.one() == b.one() && a.mul_table() == b.mul_table());
}

std::vector<Elem> idempotents(const FiniteRing& ring) {
  std::vector<Elem> out;
  for (Elem e = 0; e < ring.order(); ++e)
    if (ring.mul(e, e) == e) out.push_back(e);
  return out;
}

}  // namespace qhull
