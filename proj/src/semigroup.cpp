#include "mds/semigroup.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <vector>

#include "mds/errors.hpp"
#include "mds/lattice.hpp"

namespace mds {

std::optional<SemigroupWitness> member(const BigInt& d, const WeightsTriple& w) {
  if (w.a <= 0 || w.b <= 0 || w.c <= 0) throw ArgumentError("member: weights must be positive");
  if (d < 0) return std::nullopt;
  // Smallest m0 first; for fixed m0 the smallest m1 solves b*m1 = R (mod c).
  const BigInt g = gcd(w.b, w.c);
  const BigInt b_red = w.b / g;
  const BigInt c_red = w.c / g;
  const BigInt b_inv = mod_inverse(b_red, c_red);
  for (BigInt m0(0); w.a * m0 <= d; ++m0) {
    const BigInt rest = d - w.a * m0;
    if (rest % g != 0) continue;
    const BigInt m1 = mod_floor((rest / g) * b_inv, c_red);
    if (w.b * m1 > rest) continue;
    return SemigroupWitness{m0, m1, (rest - w.b * m1) / w.c};
  }
  return std::nullopt;
}

BigInt frobenius_bound(const WeightsTriple& w) {
  if (gcd(gcd(w.a, w.b), w.c) != 1) {
    throw ArgumentError("frobenius_bound: gcd(a, b, c) != 1, semigroup is not numerical");
  }
  std::array<BigInt, 3> gens{w.a, w.b, w.c};
  std::sort(gens.begin(), gens.end());
  const BigInt& modulus = gens[0];
  if (modulus > BigInt(50'000'000)) throw ArgumentError("frobenius_bound: smallest weight too large");
  const auto size = modulus.convert_to<std::size_t>();

  // Dijkstra over residues mod the smallest generator.
  std::vector<std::optional<BigInt>> dist(size);
  using Item = std::pair<BigInt, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = BigInt(0);
  queue.emplace(BigInt(0), 0);
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (dist[residue] && *dist[residue] < value) continue;
    for (int k = 1; k < 3; ++k) {
      const BigInt next = value + gens[k];
      const auto r = mod_floor(next, modulus).convert_to<std::size_t>();
      if (!dist[r] || next < *dist[r]) {
        dist[r] = next;
        queue.emplace(next, r);
      }
    }
  }
  BigInt largest(0);
  for (const auto& v : dist) largest = std::max(largest, *v);
  return largest - modulus;
}

}  // namespace mds
