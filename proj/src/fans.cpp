#include "mds/fans.hpp"

#include "mds/errors.hpp"
#include "mds/lattice.hpp"

namespace mds {

namespace {

void check(bool ok, const std::string& what) {
  if (!ok) throw ConsistencyError(what);
}

IntVector vec2(const BigInt& x, const BigInt& y) {
  IntVector v(2);
  v << x, y;
  return v;
}

}  // namespace

SurfaceFan surface_fan(const Relation& rel, const WeightsTriple& w) {
  const WeightsTriple p = w.permuted(rel.perm);
  relation_width(rel, w);
  const BigInt r = find_r(rel, w).r;
  const BigInt x0 = rel.e * r - p.b;
  const BigInt x1 = rel.f * r + p.a;
  check(x0 % rel.g == 0 && x1 % rel.g == 0, "surface_fan: g does not divide er - b and fr + a");
  SurfaceFan fan;
  fan.weights = p;
  fan.perm = rel.perm;
  fan.rays = {vec2(x0 / rel.g, -rel.e), vec2(x1 / rel.g, -rel.f), vec2(-r, rel.g)};
  fan.r = r;
  validate(fan);
  return fan;
}

SurfaceFan plane_fan(const WeightsTriple& w) {
  IntVector weights(3);
  weights << w.a, w.b, w.c;
  // Primitive rays with |det(u_i, u_j)| = q_k force pairwise coprime weights.
  if (!w.pairwise_coprime()) throw ArgumentError("plane_fan: weights must be pairwise coprime");
  // Rows 2..3 of a unimodular W with W (a,b,c)^T = e_1 give a surjection
  // Z^3 -> Z^2 whose kernel is Z (a,b,c).
  const IntMatrix reducer = unimodular_reducer(weights);
  std::array<IntVector, 3> u;
  for (int i = 0; i < 3; ++i) u[i] = reducer.block(1, i, 2, 1);

  // A primitive functional negative on u0 and u1 becomes the new y axis.
  RatMatrix lhs(2, 2);
  lhs << Rational(u[0](0)), Rational(u[0](1)), Rational(u[1](0)), Rational(u[1](1));
  RatVector rhs(2);
  rhs << Rational(-1), Rational(-1);
  const auto functional = solve_exact(lhs, rhs);
  if (!functional) throw ConsistencyError("plane_fan: u0 and u1 are dependent");
  const IntVector ell = primitive_along(*functional);
  auto [g, x, y] = extended_gcd(ell(1), ell(0));
  check(g == 1, "plane_fan: functional not primitive");
  IntMatrix change(2, 2);
  change << x, -y, ell(0), ell(1);

  SurfaceFan fan;
  fan.weights = w;
  for (int i = 0; i < 3; ++i) fan.rays[i] = change * u[i];
  validate(fan);
  return fan;
}

void validate(const SurfaceFan& fan) {
  const auto& [u0, u1, u2] = fan.rays;
  const auto& w = fan.weights;
  check(w.a * u0 + w.b * u1 + w.c * u2 == IntVector::Zero(2), "surface fan: a u0 + b u1 + c u2 != 0");
  for (const auto& u : fan.rays) check(is_primitive(u), "surface fan: ray " + format_vector(u) + " not primitive");
  const std::array<BigInt, 3> omitted{w.a, w.b, w.c};
  for (int i = 0; i < 3; ++i) {
    std::array<IntVector, 2> pair{fan.rays[(i + 1) % 3], fan.rays[(i + 2) % 3]};
    check(abs_of(det(pair)) == omitted[i], "surface fan: |det| of cone omitting u" + std::to_string(i) +
                                               " is not " + omitted[i].str());
  }
  check(u0(1) < 0 && u1(1) < 0 && u2(1) > 0, "surface fan: sign conditions y0, y1 < 0 < y2 violated");
}

TriangleDelta triangle_delta(const Relation& rel, const WeightsTriple& w) {
  const WeightsTriple p = w.permuted(rel.perm);
  const Rational width = relation_width(rel, w);
  if (width >= 1) throw ArgumentError("triangle_delta: relation width is not < 1");
  const BigInt r = find_r(rel, w).r;
  TriangleDelta t;
  t.vertices[0] = RatVector::Zero(2);
  t.vertices[1] = make_vector<Rational>({make_rational(-rel.e * rel.g, p.b), make_rational(-(rel.e * r - p.b), p.b)});
  t.vertices[2] = make_vector<Rational>({make_rational(rel.f * rel.g, p.a), make_rational(rel.f * r + p.a, p.a)});
  t.width = t.vertices[2](0) - t.vertices[1](0);
  check(t.width == width, "triangle_delta: x-extent differs from c g^2 / (a b)");
  return t;
}

AmbientFan ambient_fan(const WeightsTriple& w, const std::vector<BigInt>& ds) {
  const auto rel = find_relation(w);
  if (!rel) {
    throw NoRelation("NoRelation: (" + w.a.str() + ", " + w.b.str() + ", " + w.c.str() +
                     ") has no relation of width < 1");
  }
  return ambient_fan(surface_fan(*rel, w), ds);
}

AmbientFan ambient_fan(const SurfaceFan& surface, const std::vector<BigInt>& ds) {
  const auto n = static_cast<Eigen::Index>(ds.size()) + 2;
  AmbientFan fan;
  fan.perm = surface.perm;
  fan.weights = {surface.weights.a, surface.weights.b, surface.weights.c};
  for (const auto& d : ds) {
    if (d <= 0) throw ArgumentError("ambient_fan: weights must be positive");
    auto wit = member(d, surface.weights);
    if (!wit) throw NotInSemigroup(d);
    fan.witnesses.push_back(*wit);
    fan.weights.push_back(d);
  }
  for (int i = 0; i < 3; ++i) {
    IntVector v = IntVector::Zero(n);
    v.head(2) = surface.rays[i];
    for (std::size_t j = 0; j < ds.size(); ++j) {
      const auto& wit = fan.witnesses[j];
      const BigInt& m = i == 0 ? wit.m0 : (i == 1 ? wit.m1 : wit.m2);
      v(static_cast<Eigen::Index>(j) + 2) = -m;
    }
    fan.rays.push_back(v);
  }
  for (Eigen::Index j = 2; j < n; ++j) {
    IntVector e = IntVector::Zero(n);
    e(j) = 1;
    fan.rays.push_back(e);
  }
  validate(fan);
  return fan;
}

std::vector<IntVector> rays_omitting(const AmbientFan& fan, std::size_t skip) {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    if (i != skip) out.push_back(fan.rays[i]);
  }
  return out;
}

void validate(const AmbientFan& fan) {
  const Eigen::Index n = fan.dim();
  check(n >= 2 && fan.weights.size() == fan.rays.size(), "ambient fan: shape mismatch");
  IntVector total = IntVector::Zero(n);
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    check(fan.rays[i].size() == n, "ambient fan: ray rank mismatch");
    check(is_primitive(fan.rays[i]), "ambient fan: v" + std::to_string(i) + " = " +
                                         format_vector(fan.rays[i]) + " is not primitive");
    total += fan.weights[i] * fan.rays[i];
  }
  check(total == IntVector::Zero(n), "ambient fan: sum q_i v_i != 0");
  const auto index = lattice_index(fan.rays, n);
  check(index && *index == 1, "ambient fan: rays do not span Z^n");
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto cone = rays_omitting(fan, i);
    check(abs_of(det(cone)) == fan.weights[i],
          "ambient fan: cone omitting v" + std::to_string(i) + " has multiplicity " +
              abs_of(det(cone)).str() + ", expected " + fan.weights[i].str());
  }
  for (Eigen::Index j = 3; j < static_cast<Eigen::Index>(fan.rays.size()); ++j) {
    IntVector e = IntVector::Zero(n);
    e(j - 1) = 1;
    check(fan.rays[static_cast<std::size_t>(j)] == e, "ambient fan: v" + std::to_string(j) + " is not e_" + std::to_string(j));
    for (int i = 0; i < 3; ++i) check(fan.rays[i](j - 1) <= 0, "ambient fan: positive m_{i,j} entry");
  }
}

}  // namespace mds
