#pragma once

// Facet-presented simplices { z : <v_i, z> <= a_i } whose normal fan is a
// weighted projective fan, lattice point enumeration, and the projection onto
// the first two coordinates.

#include <optional>
#include <span>
#include <vector>

#include "mds/fans.hpp"
#include "mds/numeric.hpp"

namespace mds {

struct FacetPolytope {
  std::vector<IntVector> normals;
  std::vector<BigInt> supports;
  /// vertices[i] lies on every facet except facet i.
  std::vector<RatVector> vertices;

  Eigen::Index dim() const { return normals.empty() ? 0 : normals.front().size(); }
  bool contains(const RatVector& z) const;
  bool contains(const IntVector& z) const;
  bool is_lattice() const;
};

/// Builds the simplex from n+1 normals in rank n. Throws GeometryError when
/// the presentation is degenerate or not a simplex with one facet per normal.
FacetPolytope simplex_from_facets(std::vector<IntVector> normals, std::vector<BigInt> supports);

/// P for explicit supports, or (nullopt) the "auto" choice: every a_i equal
/// to the lcm of the vertex denominators obtained with a_i = 1.
FacetPolytope facet_polytope(const AmbientFan& fan,
                             const std::optional<std::vector<BigInt>>& supports = std::nullopt);

/// Supports (lcm(q)/q_0, 0, ..., 0): a lattice polytope of the smallest
/// Cartier degree lcm(q).
std::vector<BigInt> minimal_supports(const AmbientFan& fan);

/// Outward primitive facet normals of a simplex given by its vertices;
/// entry i is the normal of the facet opposite vertex i.
std::vector<IntVector> simplex_normal_fan(std::span<const RatVector> vertices);

struct IntBox {
  IntVector lo, hi;
};

IntBox bounding_box(std::span<const RatVector> points);

/// All lattice points of P by scanning its bounding box.
std::vector<IntVector> lattice_points(const FacetPolytope& p);

struct ProjectionReport {
  /// Q = { y : <u_i, y> <= q_i }, q_i = a_i + sum_j a_j m_{i,j}.
  FacetPolytope q;
  bool q_is_lattice_triangle = false;
  bool vertices_are_projections = false;
  std::vector<IntVector> q_normal_rays;
  bool normal_fan_matches = false;
  std::size_t image_of_lattice_points = 0;  // |rho(P cap M)|
  std::size_t lattice_points_of_image = 0;  // |rho(P) cap M12|
  std::size_t q_lattice_points = 0;
  bool projection_commutes = false;  // rho(P cap M) == rho(P) cap M12
  bool image_equals_q = false;       // rho(P) cap M12 == Q cap M12
  std::size_t columns_scanned = 0;
};

/// Projects P onto the first two coordinates and checks, by enumerating every
/// integer column of the image's bounding box with an exact fiber search, that
/// rho(P cap M) = rho(P) cap M12 = Q cap M12 and that Q is a lattice triangle
/// normal to u0, u1, u2. Throws ConsistencyError when a check fails.
ProjectionReport project_polytope(const FacetPolytope& p);

/// Linear inequalities A x <= b over the rationals.
struct LinearSystem {
  std::vector<RatVector> rows;
  std::vector<Rational> rhs;
  Eigen::Index vars = 0;
};

/// Fourier-Motzkin elimination of the last variable.
LinearSystem eliminate_last(const LinearSystem& s);
bool has_real_point(const LinearSystem& s);
bool has_integer_point(const LinearSystem& s);

}  // namespace mds
