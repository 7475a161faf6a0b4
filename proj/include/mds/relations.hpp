#pragma once

// Relations ae + bf = cg of width cg^2/(ab) < 1 between three weights, and
// the distinguished integer r that fixes the surface fan.

#include <array>
#include <optional>
#include <vector>

#include "mds/numeric.hpp"

namespace mds {

struct WeightsTriple {
  BigInt a, b, c;

  const BigInt& operator[](int i) const { return i == 0 ? a : (i == 1 ? b : c); }
  bool pairwise_coprime() const { return gcd(a, b) == 1 && gcd(a, c) == 1 && gcd(b, c) == 1; }
  /// Reorders the weights: result[k] = (*this)[perm[k]].
  WeightsTriple permuted(const std::array<int, 3>& perm) const {
    return {(*this)[perm[0]], (*this)[perm[1]], (*this)[perm[2]]};
  }
  BigInt product() const { return a * b * c; }
  friend bool operator==(const WeightsTriple&, const WeightsTriple&) = default;
};

/// ae + bf = cg where (a, b, c) = weights.permuted(perm); perm[2] is the
/// index of the input weight sitting in the "c" slot.
struct Relation {
  BigInt e, f, g;
  std::array<int, 3> perm{0, 1, 2};
  Rational width;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct DistinguishedR {
  BigInt r;
  friend bool operator==(const DistinguishedR&, const DistinguishedR&) = default;
};

struct SearchLimits {
  /// Upper bound on g explored by the relation search; 0 means unbounded.
  BigInt max_g{0};
};

/// The three slot assignments in search order: c = input c, then b, then a.
inline constexpr std::array<std::array<int, 3>, 3> kRelationPerms{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};

/// Every relation of width < 1 with gcd(e, f, g) = 1, over all slot
/// assignments. For pairwise-coprime weights there is at most one.
std::vector<Relation> narrow_relations(const WeightsTriple& w, const SearchLimits& limits = {});

/// The first relation of width < 1 in search order, or nullopt.
std::optional<Relation> find_relation(const WeightsTriple& w, const SearchLimits& limits = {});

/// c g^2 / (a b) for a relation valid on w; throws ArgumentError otherwise.
Rational relation_width(const Relation& rel, const WeightsTriple& w);

/// The unique r in [1, g] with g | er - b and g | fr + a.
DistinguishedR find_r(const Relation& rel, const WeightsTriple& w);

}  // namespace mds
