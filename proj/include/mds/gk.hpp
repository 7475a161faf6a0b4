#pragma once

// Gonzalez-Karu type triangles and tetrahedra, slice counts, and the two
// slice criteria (surface and threefold), plus the (e, f, g1, g2) search
// for P(a, b, c, d).

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "mds/fans.hpp"
#include "mds/numeric.hpp"
#include "mds/relations.hpp"

namespace mds {

/// Triangle with vertices (0,0), left, right; left, right and (0,1) collinear,
/// x(left) < 0 < x(right).
struct GKTriangle {
  RatVector left, right;
  Rational width;
  Rational s2;  // slope of the left-right edge
};

GKTriangle make_gk_triangle(const RatVector& left, const RatVector& right);

/// Applies the integer shear (x, y) -> (x, y + kx) that puts s2 into [0, 1).
GKTriangle normalized(const GKTriangle& t);
/// Reflection about the y-axis, then normalized.
GKTriangle reflected(const GKTriangle& t);
/// Triangle Delta_xi in normalized GK form.
GKTriangle gk_triangle(const TriangleDelta& delta);

/// Lcm of the denominators of the vertex coordinates: smallest m with m T lattice.
BigInt default_scale(const GKTriangle& t);

/// Number of lattice points of m T on the line x = i (0 outside the x-range).
BigInt slice_count_2d(const GKTriangle& t, const BigInt& m, const BigInt& i);

struct CriterionReport {
  BigInt m;
  BigInt n;            // slice size at m x(P_L) + 1
  BigInt left_x;       // m x(P_L) + 1
  BigInt right_x;      // m x(P_R) - n + 1
  BigInt right_size;   // slice size at right_x
  bool slices_match = false;
  bool slope_condition = false;
  bool holds = false;
};

CriterionReport gk_surface_criterion(const GKTriangle& t, const BigInt& m);

struct StableReport {
  std::vector<CriterionReport> per_scale;
  bool holds = false;
};

inline const std::vector<BigInt>& default_multipliers() {
  static const std::vector<BigInt> scales{BigInt(1), BigInt(2), BigInt(3)};
  return scales;
}

/// Evaluates a criterion at base_m * k for every multiplier k; throws
/// StabilityError if the outcomes disagree.
StableReport evaluate_stable(const std::function<CriterionReport(const BigInt&)>& criterion,
                             const BigInt& base_m, const std::vector<BigInt>& multipliers);

/// Surface criterion for the triangle of a width-< 1 relation, tried on
/// Delta_xi and on its mirror image (either orientation may be the one the
/// criterion applies to).
struct SurfaceCheck {
  GKTriangle triangle;
  GKTriangle mirror;
  StableReport direct;
  StableReport mirrored;
  bool holds = false;
};

SurfaceCheck surface_criterion(const Relation& rel, const WeightsTriple& w,
                               const std::vector<BigInt>& multipliers = default_multipliers());

/// ae + bf = c g1 = d g2 on (a, b, c, d) = weights[perm[0..3]].
struct QuadRelation {
  BigInt e, f, g1, g2;
  std::array<int, 4> perm{0, 1, 2, 3};
  Rational W;
  friend bool operator==(const QuadRelation&, const QuadRelation&) = default;
};

/// First (g2, then g1, then e ascending) solution with W = (d g2)^3/(abcd) <= 1
/// and the coprimality side conditions, over all weight assignments.
std::optional<QuadRelation> find_quad_relation(const std::array<BigInt, 4>& weights);

/// Tetrahedron with vertices (0,0,1), (0,1,0), left, right; left = lambda * right.
struct GKPolytope3 {
  RatVector left, right;
  Rational width, sy, sz;
  /// First lattice points on the four normal rays, paired with the weights.
  std::array<IntVector, 4> rays;
  std::array<BigInt, 4> weights;  // (a, b, c, d) in quad order
};

GKPolytope3 gk_polytope_3d(const QuadRelation& q, const std::array<BigInt, 4>& weights, const BigInt& t,
                           const BigInt& u);
/// Default (T, U) = (-r, 0), with r the distinguished integer of (e, f, g1)
/// on (a, b, c); U = 1 when g2 > 1.
GKPolytope3 gk_polytope_3d(const QuadRelation& q, const std::array<BigInt, 4>& weights);

BigInt default_scale(const GKPolytope3& d);

/// Projection to the xy-plane, translated by (0,-1) and reflected in y: a GK
/// triangle of the same width.
GKTriangle project_xy(const GKPolytope3& d);

/// Size of the slice of m D at x = i, read off the xy-projection.
BigInt slice_size_3d(const GKPolytope3& d, const BigInt& m, const BigInt& i);

CriterionReport gk_3fold_criterion(const GKPolytope3& d, const BigInt& m);

}  // namespace mds
