#include "mds/polytope.hpp"

#include "mds/errors.hpp"
#include "mds/lattice.hpp"

namespace mds {

namespace {

Rational pairing(const IntVector& normal, const RatVector& z) {
  Rational acc(0);
  for (Eigen::Index k = 0; k < normal.size(); ++k) acc += Rational(normal(k)) * z(k);
  return acc;
}

BigInt pairing(const IntVector& normal, const IntVector& z) { return normal.dot(z); }

RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }

}  // namespace

bool FacetPolytope::contains(const RatVector& z) const {
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (pairing(normals[i], z) > Rational(supports[i])) return false;
  }
  return true;
}

bool FacetPolytope::contains(const IntVector& z) const {
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if (pairing(normals[i], z) > supports[i]) return false;
  }
  return true;
}

bool FacetPolytope::is_lattice() const {
  for (const auto& v : vertices) {
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      if (!is_integral(v(k))) return false;
    }
  }
  return true;
}

FacetPolytope simplex_from_facets(std::vector<IntVector> normals, std::vector<BigInt> supports) {
  const auto count = normals.size();
  if (count < 2 || supports.size() != count) throw ArgumentError("simplex_from_facets: shape mismatch");
  const Eigen::Index n = normals.front().size();
  if (static_cast<Eigen::Index>(count) != n + 1) {
    throw ArgumentError("simplex_from_facets: need n+1 normals in rank n");
  }
  FacetPolytope p{std::move(normals), std::move(supports), {}};
  for (std::size_t i = 0; i < count; ++i) {
    RatMatrix lhs(n, n);
    RatVector rhs(n);
    Eigen::Index row = 0;
    for (std::size_t j = 0; j < count; ++j) {
      if (j == i) continue;
      lhs.row(row) = to_rational(p.normals[j]).transpose();
      rhs(row) = Rational(p.supports[j]);
      ++row;
    }
    auto vertex = solve_exact(lhs, rhs);
    if (!vertex) throw GeometryError("facet presentation is not simplicial: normals omitting #" + std::to_string(i) + " are dependent");
    // The omitted facet must be strictly slack, otherwise the simplex collapses.
    if (!(pairing(p.normals[i], *vertex) < Rational(p.supports[i]))) {
      throw GeometryError("degenerate or empty facet presentation (vertex " + std::to_string(i) +
                          " is not strictly inside facet " + std::to_string(i) + ")");
    }
    p.vertices.push_back(std::move(*vertex));
  }
  return p;
}

FacetPolytope facet_polytope(const AmbientFan& fan, const std::optional<std::vector<BigInt>>& supports) {
  validate(fan);
  if (supports) {
    if (supports->size() != fan.rays.size()) throw ArgumentError("facet_polytope: need one support per ray");
    return simplex_from_facets(fan.rays, *supports);
  }
  const auto unit = simplex_from_facets(fan.rays, std::vector<BigInt>(fan.rays.size(), BigInt(1)));
  BigInt k(1);
  for (const auto& v : unit.vertices) {
    for (Eigen::Index i = 0; i < v.size(); ++i) k = lcm(k, denominator_of(v(i)));
  }
  auto p = simplex_from_facets(fan.rays, std::vector<BigInt>(fan.rays.size(), k));
  if (!p.is_lattice()) throw ConsistencyError("facet_polytope: auto supports did not clear denominators");
  return p;
}

std::vector<BigInt> minimal_supports(const AmbientFan& fan) {
  BigInt l(1);
  for (const auto& q : fan.weights) l = lcm(l, q);
  std::vector<BigInt> out(fan.weights.size(), BigInt(0));
  out[0] = l / fan.weights[0];
  return out;
}

std::vector<IntVector> simplex_normal_fan(std::span<const RatVector> vertices) {
  const auto count = vertices.size();
  if (count < 2) throw ArgumentError("simplex_normal_fan: need at least two vertices");
  const Eigen::Index n = vertices.front().size();
  if (static_cast<Eigen::Index>(count) != n + 1) throw ArgumentError("simplex_normal_fan: need n+1 vertices");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<RatVector> facet;
    for (std::size_t j = 0; j < count; ++j) {
      if (j != i) facet.push_back(vertices[j]);
    }
    // Generalized cross product of the n-1 edge vectors of the facet.
    RatMatrix edges(n - 1, n);
    for (Eigen::Index r = 0; r + 1 < n; ++r) edges.row(r) = (facet[r + 1] - facet[0]).transpose();
    RatVector normal(n);
    for (Eigen::Index c = 0; c < n; ++c) {
      RatMatrix minor(n - 1, n - 1);
      for (Eigen::Index r = 0; r + 1 < n; ++r) {
        Eigen::Index cc = 0;
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k != c) minor(r, cc++) = edges(r, k);
        }
      }
      const Rational m = determinant(minor);
      normal(c) = (c % 2 == 0) ? m : Rational(-m);
    }
    Rational slack(0);
    for (Eigen::Index k = 0; k < n; ++k) slack += normal(k) * (vertices[i](k) - facet[0](k));
    if (slack == 0) throw GeometryError("simplex_normal_fan: vertices are affinely dependent");
    if (slack > 0) normal = -normal;
    out.push_back(primitive_along(normal));
  }
  return out;
}

IntBox bounding_box(std::span<const RatVector> points) {
  if (points.empty()) throw ArgumentError("bounding_box: no points");
  const Eigen::Index n = points.front().size();
  IntBox box{IntVector(n), IntVector(n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    Rational lo = points.front()(k), hi = points.front()(k);
    for (const auto& p : points) {
      lo = std::min(lo, p(k));
      hi = std::max(hi, p(k));
    }
    box.lo(k) = ceil_of(lo);
    box.hi(k) = floor_of(hi);
  }
  return box;
}

std::vector<IntVector> lattice_points(const FacetPolytope& p) {
  const IntBox box = bounding_box(p.vertices);
  const Eigen::Index n = p.dim();
  std::vector<IntVector> out;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (box.lo(k) > box.hi(k)) return out;
  }
  IntVector z = box.lo;
  for (;;) {
    if (p.contains(z)) out.push_back(z);
    Eigen::Index k = n - 1;
    while (k >= 0 && z(k) == box.hi(k)) {
      z(k) = box.lo(k);
      --k;
    }
    if (k < 0) break;
    z(k) += 1;
  }
  return out;
}

LinearSystem eliminate_last(const LinearSystem& s) {
  if (s.vars == 0) throw ArgumentError("eliminate_last: no variables left");
  const Eigen::Index last = s.vars - 1;
  LinearSystem out;
  out.vars = last;
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    const Rational& c = s.rows[i](last);
    if (c > 0) {
      pos.push_back(i);
    } else if (c < 0) {
      neg.push_back(i);
    } else {
      out.rows.push_back(s.rows[i].head(last));
      out.rhs.push_back(s.rhs[i]);
    }
  }
  for (auto ip : pos) {
    for (auto in : neg) {
      const Rational cp = s.rows[ip](last);
      const Rational cn = -s.rows[in](last);
      out.rows.push_back(cn * s.rows[ip].head(last) + cp * s.rows[in].head(last));
      out.rhs.push_back(cn * s.rhs[ip] + cp * s.rhs[in]);
    }
  }
  return out;
}

bool has_real_point(const LinearSystem& s) {
  LinearSystem cur = s;
  while (cur.vars > 0) cur = eliminate_last(cur);
  for (const auto& b : cur.rhs) {
    if (b < 0) return false;
  }
  return true;
}

namespace {

LinearSystem substitute_first(const LinearSystem& s, const BigInt& value) {
  LinearSystem out;
  out.vars = s.vars - 1;
  for (std::size_t i = 0; i < s.rows.size(); ++i) {
    out.rows.push_back(s.rows[i].tail(s.vars - 1));
    out.rhs.push_back(s.rhs[i] - s.rows[i](0) * Rational(value));
  }
  return out;
}

}  // namespace

bool has_integer_point(const LinearSystem& s) {
  if (s.vars == 0) {
    for (const auto& b : s.rhs) {
      if (b < 0) return false;
    }
    return true;
  }
  LinearSystem first = s;
  while (first.vars > 1) first = eliminate_last(first);
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < first.rows.size(); ++i) {
    const Rational& c = first.rows[i](0);
    if (c == 0) {
      if (first.rhs[i] < 0) return false;
      continue;
    }
    const Rational bound = first.rhs[i] / c;
    if (c > 0) {
      if (!hi || bound < *hi) hi = bound;
    } else if (!lo || bound > *lo) {
      lo = bound;
    }
  }
  if (!lo || !hi) throw GeometryError("has_integer_point: unbounded system");
  for (BigInt x = ceil_of(*lo); x <= floor_of(*hi); ++x) {
    if (has_integer_point(substitute_first(s, x))) return true;
  }
  return false;
}

ProjectionReport project_polytope(const FacetPolytope& p) {
  const Eigen::Index n = p.dim();
  if (n < 2 || p.normals.size() != static_cast<std::size_t>(n + 1)) {
    throw ArgumentError("project_polytope: expected a simplex with n+1 facets");
  }
  for (Eigen::Index j = 3; j <= n; ++j) {
    IntVector e = IntVector::Zero(n);
    e(j - 1) = 1;
    if (p.normals[static_cast<std::size_t>(j)] != e) {
      throw ArgumentError("project_polytope: normal v" + std::to_string(j) + " is not e_" + std::to_string(j));
    }
  }

  ProjectionReport report;
  std::vector<IntVector> u;
  std::vector<BigInt> q;
  for (std::size_t i = 0; i < 3; ++i) {
    u.push_back(p.normals[i].head(2));
    BigInt qi = p.supports[i];
    for (Eigen::Index j = 2; j < n; ++j) qi += p.supports[static_cast<std::size_t>(j + 1)] * (-p.normals[i](j));
    q.push_back(qi);
  }
  report.q = simplex_from_facets(u, q);
  report.q_is_lattice_triangle = report.q.is_lattice();
  report.vertices_are_projections = true;
  for (std::size_t i = 0; i < 3; ++i) {
    if (report.q.vertices[i] != RatVector(p.vertices[i].head(2))) report.vertices_are_projections = false;
  }
  report.q_normal_rays = simplex_normal_fan(report.q.vertices);
  report.normal_fan_matches = report.q_normal_rays == u;

  std::vector<RatVector> shadow;
  for (const auto& v : p.vertices) shadow.push_back(v.head(2));
  const IntBox box = bounding_box(shadow);

  bool commutes = true, equals_q = true;
  IntVector y(2);
  for (y(0) = box.lo(0); y(0) <= box.hi(0); ++y(0)) {
    for (y(1) = box.lo(1); y(1) <= box.hi(1); ++y(1)) {
      ++report.columns_scanned;
      LinearSystem fiber;
      fiber.vars = n - 2;
      for (std::size_t i = 0; i < p.normals.size(); ++i) {
        fiber.rows.push_back(p.normals[i].tail(n - 2).cast<Rational>());
        fiber.rhs.push_back(Rational(p.supports[i] - p.normals[i].head(2).dot(y)));
      }
      const bool real = has_real_point(fiber);
      const bool integral = real && has_integer_point(fiber);
      const bool in_q = report.q.contains(y);
      report.lattice_points_of_image += real;
      report.image_of_lattice_points += integral;
      report.q_lattice_points += in_q;
      if (real != integral) commutes = false;
      if (real != in_q) equals_q = false;
    }
  }
  report.projection_commutes = commutes;
  report.image_equals_q = equals_q;

  if (!report.q_is_lattice_triangle) throw ConsistencyError("project_polytope: Q is not a lattice triangle");
  if (!report.vertices_are_projections) throw ConsistencyError("project_polytope: Q's vertices are not rho(xi_i)");
  if (!report.normal_fan_matches) throw ConsistencyError("project_polytope: normal fan of Q is not u0, u1, u2");
  if (!commutes) throw ConsistencyError("project_polytope: rho(P cap M) != rho(P) cap M12");
  if (!equals_q) throw ConsistencyError("project_polytope: rho(P) != Q");
  return report;
}

}  // namespace mds
