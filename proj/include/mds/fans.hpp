#pragma once

// Fans of P(a, b, c) and of P(a, b, c, d_1, ..., d_{n-2}), and the triangle
// normal to the surface fan.

#include <array>
#include <optional>
#include <vector>

#include "mds/numeric.hpp"
#include "mds/relations.hpp"
#include "mds/semigroup.hpp"

namespace mds {

/// Rays u0, u1, u2 of a fan of P(weights) with a u0 + b u1 + c u2 = 0 and
/// second coordinates y0, y1 < 0 < y2. `weights` are in slot order (the
/// relation's permutation already applied).
struct SurfaceFan {
  WeightsTriple weights;
  std::array<int, 3> perm{0, 1, 2};
  std::array<IntVector, 3> rays;
  /// Present when the fan comes from a width-< 1 relation.
  std::optional<BigInt> r;
};

/// Rays v0..vn of a fan of P(q0, ..., qn); v_j = e_j for j >= 3 (one-based),
/// the trailing coordinates of v0, v1, v2 are -m_{i,j}.
struct AmbientFan {
  std::vector<BigInt> weights;
  std::vector<IntVector> rays;
  std::vector<SemigroupWitness> witnesses;
  std::array<int, 3> perm{0, 1, 2};

  Eigen::Index dim() const { return static_cast<Eigen::Index>(rays.size()) - 1; }
  /// Surface weights (a, b, c) in slot order.
  WeightsTriple surface_weights() const { return {weights[0], weights[1], weights[2]}; }
  friend bool operator==(const AmbientFan&, const AmbientFan&) = default;
};

struct TriangleDelta {
  std::array<RatVector, 3> vertices;
  Rational width;
};

SurfaceFan surface_fan(const Relation& rel, const WeightsTriple& w);

/// A fan of P(a, b, c) with the sign conditions, for pairwise coprime
/// weights; no relation needed.
SurfaceFan plane_fan(const WeightsTriple& w);

/// Vertices (0,0), (-eg/b, -(er-b)/b), (fg/a, (fr+a)/a).
TriangleDelta triangle_delta(const Relation& rel, const WeightsTriple& w);

/// Fan of P(a, b, c, ds...) built from the width-< 1 relation of (a, b, c).
/// Throws NoRelation or NotInSemigroup.
AmbientFan ambient_fan(const WeightsTriple& w, const std::vector<BigInt>& ds);

/// Same construction on top of an arbitrary surface fan.
AmbientFan ambient_fan(const SurfaceFan& surface, const std::vector<BigInt>& ds);

/// Checks the weighted relation, primitivity, spanning, and that the cone
/// omitting v_i has multiplicity q_i. Throws ConsistencyError on failure.
void validate(const AmbientFan& fan);
void validate(const SurfaceFan& fan);

/// Rays omitting index `skip`.
std::vector<IntVector> rays_omitting(const AmbientFan& fan, std::size_t skip);

}  // namespace mds
