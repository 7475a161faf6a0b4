#include "mds/gk.hpp"

#include <algorithm>
#include <tuple>

#include "mds/errors.hpp"
#include "mds/lattice.hpp"

namespace mds {

namespace {

RatVector point2(const Rational& x, const Rational& y) { return make_vector<Rational>({x, y}); }

bool scaled_is_lattice(const RatVector& v, const BigInt& m) {
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (!is_integral(v(k) * Rational(m))) return false;
  }
  return true;
}

BigInt denominators_lcm(std::initializer_list<const RatVector*> points) {
  BigInt l(1);
  for (const auto* p : points) {
    for (Eigen::Index k = 0; k < p->size(); ++k) l = lcm(l, denominator_of((*p)(k)));
  }
  return l;
}

void require_narrow(const Rational& width) {
  if (width == 1) throw BoundaryWidthError("slice criterion needs width < 1, got width exactly 1");
  if (width > 1) throw ArgumentError("slice criterion needs width < 1, got " + width.str());
}

}  // namespace

GKTriangle make_gk_triangle(const RatVector& left, const RatVector& right) {
  if (left.size() != 2 || right.size() != 2) throw ArgumentError("make_gk_triangle: points must be 2D");
  if (!(left(0) < 0 && right(0) > 0)) throw GeometryError("GK triangle needs x(P_L) < 0 < x(P_R)");
  // (0,1) on the line through left and right.
  const Rational cross = (right(0) - left(0)) * (Rational(1) - left(1)) - (right(1) - left(1)) * (-left(0));
  if (cross != 0) throw GeometryError("GK triangle: P_L, P_R and (0,1) are not collinear");
  GKTriangle t{left, right, right(0) - left(0), Rational(0)};
  t.s2 = (right(1) - left(1)) / t.width;
  return t;
}

GKTriangle normalized(const GKTriangle& t) {
  const BigInt k = -floor_of(t.s2);
  const Rational kr(k);
  return make_gk_triangle(point2(t.left(0), t.left(1) + kr * t.left(0)),
                          point2(t.right(0), t.right(1) + kr * t.right(0)));
}

GKTriangle reflected(const GKTriangle& t) {
  return normalized(make_gk_triangle(point2(-t.right(0), t.right(1)), point2(-t.left(0), t.left(1))));
}

GKTriangle gk_triangle(const TriangleDelta& delta) {
  return normalized(make_gk_triangle(delta.vertices[1], delta.vertices[2]));
}

BigInt default_scale(const GKTriangle& t) { return denominators_lcm({&t.left, &t.right}); }

BigInt slice_count_2d(const GKTriangle& t, const BigInt& m, const BigInt& i) {
  if (m <= 0) throw ArgumentError("slice_count_2d: m must be positive");
  if (!scaled_is_lattice(t.left, m) || !scaled_is_lattice(t.right, m)) {
    throw ArgumentError("slice_count_2d: m T is not a lattice triangle for m = " + m.str());
  }
  const Rational x(i);
  const Rational scale(m);
  if (x < scale * t.left(0) || x > scale * t.right(0)) return BigInt(0);
  const Rational top = scale + t.s2 * x;
  const Rational bottom = i <= 0 ? t.left(1) / t.left(0) * x : t.right(1) / t.right(0) * x;
  const BigInt count = floor_of(top) - ceil_of(bottom) + 1;
  return count < 0 ? BigInt(0) : count;
}

CriterionReport gk_surface_criterion(const GKTriangle& t, const BigInt& m) {
  require_narrow(t.width);
  CriterionReport rep;
  rep.m = m;
  rep.left_x = numerator_of(t.left(0) * Rational(m)) + 1;
  rep.n = slice_count_2d(t, m, rep.left_x);
  rep.right_x = numerator_of(t.right(0) * Rational(m)) - rep.n + 1;
  rep.right_size = slice_count_2d(t, m, rep.right_x);
  rep.slices_match = rep.right_size == rep.n;
  rep.slope_condition = !is_integral(Rational(rep.n) * t.s2);
  rep.holds = rep.slices_match && rep.slope_condition;
  return rep;
}

StableReport evaluate_stable(const std::function<CriterionReport(const BigInt&)>& criterion,
                             const BigInt& base_m, const std::vector<BigInt>& multipliers) {
  if (multipliers.empty()) throw ArgumentError("evaluate_stable: no scales");
  StableReport out;
  for (const auto& k : multipliers) {
    if (k <= 0) throw ArgumentError("evaluate_stable: scales must be positive");
    out.per_scale.push_back(criterion(base_m * k));
  }
  out.holds = out.per_scale.front().holds;
  for (const auto& rep : out.per_scale) {
    if (rep.holds != out.holds) {
      throw StabilityError("slice criterion is not stable: m = " + out.per_scale.front().m.str() + " gives " +
                           (out.holds ? "true" : "false") + ", m = " + rep.m.str() + " gives " +
                           (rep.holds ? "true" : "false"));
    }
  }
  return out;
}

SurfaceCheck surface_criterion(const Relation& rel, const WeightsTriple& w, const std::vector<BigInt>& multipliers) {
  SurfaceCheck out;
  out.triangle = gk_triangle(triangle_delta(rel, w));
  out.mirror = reflected(out.triangle);
  auto run = [&](const GKTriangle& t) {
    return evaluate_stable([&](const BigInt& m) { return gk_surface_criterion(t, m); }, default_scale(t),
                           multipliers);
  };
  out.direct = run(out.triangle);
  out.mirrored = run(out.mirror);
  out.holds = out.direct.holds || out.mirrored.holds;
  return out;
}

std::optional<QuadRelation> find_quad_relation(const std::array<BigInt, 4>& weights) {
  for (const auto& w : weights) {
    if (w <= 0) throw ArgumentError("find_quad_relation: weights must be positive");
  }
  const BigInt product = weights[0] * weights[1] * weights[2] * weights[3];
  std::optional<QuadRelation> best;
  auto key = [](const QuadRelation& q) { return std::tie(q.g2, q.g1, q.e); };
  for (int ci = 0; ci < 4; ++ci) {
    for (int di = 0; di < 4; ++di) {
      if (ci == di) continue;
      std::array<int, 4> perm{};
      int slot = 0;
      for (int k = 0; k < 4; ++k) {
        if (k != ci && k != di) perm[slot++] = k;
      }
      perm[2] = ci;
      perm[3] = di;
      const BigInt &a = weights[perm[0]], &b = weights[perm[1]], &c = weights[perm[2]], &d = weights[perm[3]];
      // c g1 = d g2 = k forces k to be a multiple j lcm(c, d), and then j
      // divides both g1 and g2; only j = 1 leaves them coprime.
      const BigInt k = lcm(c, d);
      if (k * k * k <= product) {
        const BigInt g1 = k / c, g2 = k / d;
        const auto progression = linear_congruence(a, b, k);
        if (!progression) continue;
        for (BigInt e = progression->first; a * e < k; e += progression->second) {
          const BigInt f = (k - a * e) / b;
          if (gcd(gcd(e, f), g1) != 1 || gcd(gcd(e, f), g2) != 1) continue;
          QuadRelation q{e, f, g1, g2, perm, make_rational(k * k * k, product)};
          if (!best || key(q) < key(*best)) best = q;
          break;  // larger e only loses the tie-break
        }
      }
    }
  }
  return best;
}

GKPolytope3 gk_polytope_3d(const QuadRelation& q, const std::array<BigInt, 4>& weights, const BigInt& t,
                           const BigInt& u) {
  if (gcd(t, q.g1) != 1 || gcd(u, q.g2) != 1) {
    throw ArgumentError("gk_polytope_3d: need gcd(T, g1) = gcd(U, g2) = 1");
  }
  std::array<BigInt, 4> p;
  for (int k = 0; k < 4; ++k) p[k] = weights[q.perm[k]];
  const BigInt &a = p[0], &b = p[1], &c = p[2], &d = p[3];
  if (a * q.e + b * q.f != c * q.g1 || c * q.g1 != d * q.g2) {
    throw ArgumentError("gk_polytope_3d: (e, f, g1, g2) is not a solution of ae + bf = c g1 = d g2");
  }
  const Rational x = make_rational(q.e * q.g1 * q.g2, b);
  const Rational lambda = make_rational(-b * q.f, a * q.e);
  const Rational y = Rational(t) * x / Rational(q.g1);
  const Rational z = Rational(u) * x / Rational(q.g2);

  GKPolytope3 out;
  out.right = make_vector<Rational>({x, y, z});
  out.left = lambda * out.right;
  out.width = out.right(0) - out.left(0);
  if (!(out.left(0) < 0 && out.right(0) > 0 && out.width <= 1)) {
    throw GeometryError("gk_polytope_3d: not of GK type (need x(P_L) < 0 < x(P_R) <= x(P_L) + 1)");
  }
  if (out.width != q.W) throw GeometryError("gk_polytope_3d: width " + out.width.str() + " != W = " + q.W.str());
  out.sy = (out.right(1) - out.left(1)) / out.width;
  out.sz = (out.right(2) - out.left(2)) / out.width;

  const Rational one(1);
  out.rays = {primitive_along(make_vector<Rational>({one - y - z, x, x})),
              primitive_along(make_vector<Rational>({lambda * y + lambda * z - one, -lambda * x, -lambda * x})),
              primitive_along(make_vector<Rational>({y, -x, Rational(0)})),
              primitive_along(make_vector<Rational>({-lambda * z, Rational(0), lambda * x}))};
  out.weights = p;

  IntVector total = IntVector::Zero(3);
  for (int k = 0; k < 4; ++k) total += p[k] * out.rays[k];
  if (total != IntVector::Zero(3)) throw GeometryError("gk_polytope_3d: weighted sum of normal rays is not zero");
  for (int k = 0; k < 4; ++k) {
    std::vector<IntVector> cone;
    for (int j = 0; j < 4; ++j) {
      if (j != k) cone.push_back(out.rays[j]);
    }
    if (abs_of(det(cone)) != p[k]) {
      throw GeometryError("gk_polytope_3d: 3x3 minor omitting r'_" + std::to_string(k + 1) + " is " +
                          abs_of(det(cone)).str() + ", expected " + p[k].str());
    }
  }
  return out;
}

GKPolytope3 gk_polytope_3d(const QuadRelation& q, const std::array<BigInt, 4>& weights) {
  const BigInt& a = weights[q.perm[0]];
  const BigInt& b = weights[q.perm[1]];
  BigInt t(-1);
  for (BigInt r(1); r <= q.g1; ++r) {
    if ((q.e * r - b) % q.g1 == 0 && (q.f * r + a) % q.g1 == 0) {
      t = -r;
      break;
    }
  }
  return gk_polytope_3d(q, weights, t, q.g2 == 1 ? BigInt(0) : BigInt(1));
}

BigInt default_scale(const GKPolytope3& d) { return denominators_lcm({&d.left, &d.right}); }

GKTriangle project_xy(const GKPolytope3& d) {
  const Rational one(1);
  return make_gk_triangle(point2(d.left(0), one - d.left(1)), point2(d.right(0), one - d.right(1)));
}

BigInt slice_size_3d(const GKPolytope3& d, const BigInt& m, const BigInt& i) {
  if (!scaled_is_lattice(d.left, m) || !scaled_is_lattice(d.right, m)) {
    throw ArgumentError("slice_size_3d: m D is not a lattice polytope for m = " + m.str());
  }
  return slice_count_2d(project_xy(d), m, i);
}

CriterionReport gk_3fold_criterion(const GKPolytope3& d, const BigInt& m) {
  require_narrow(d.width);
  CriterionReport rep;
  rep.m = m;
  rep.left_x = numerator_of(d.left(0) * Rational(m)) + 1;
  rep.n = slice_size_3d(d, m, rep.left_x);
  rep.right_x = numerator_of(d.right(0) * Rational(m)) - rep.n + 1;
  rep.right_size = slice_size_3d(d, m, rep.right_x);
  rep.slices_match = rep.right_size == rep.n;
  const Rational n(rep.n);
  rep.slope_condition = !(is_integral(n * d.sy) && is_integral(n * d.sz));
  rep.holds = rep.slices_match && rep.slope_condition;
  return rep;
}

}  // namespace mds
