#pragma once

#include <optional>

#include "mds/numeric.hpp"
#include "mds/relations.hpp"

namespace mds {

/// a*m0 + b*m1 + c*m2 = d for the queried d and weights.
struct SemigroupWitness {
  BigInt m0, m1, m2;

  BigInt evaluate(const WeightsTriple& w) const { return w.a * m0 + w.b * m1 + w.c * m2; }
  friend bool operator==(const SemigroupWitness&, const SemigroupWitness&) = default;
};

/// Witness for d in <a, b, c>, lexicographically smallest in (m0, m1, m2),
/// or nullopt when d is not a member.
std::optional<SemigroupWitness> member(const BigInt& d, const WeightsTriple& w);

/// Frobenius number of <a, b, c>: every d above it is a member. Computed as
/// the largest element of the Apery set with respect to the smallest weight,
/// minus that weight. Requires gcd(a, b, c) = 1.
BigInt frobenius_bound(const WeightsTriple& w);

}  // namespace mds
