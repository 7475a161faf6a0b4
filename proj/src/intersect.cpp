#include "mds/intersect.hpp"

#include "mds/errors.hpp"
#include "mds/lattice.hpp"

namespace mds {

BigInt cone_multiplicity(std::span<const IntVector> rays) {
  if (rays.empty()) return BigInt(1);
  return saturation_index(rays);
}

std::optional<BigInt> fs_multiplicity(std::span<const IntVector> sublattice, std::span<const IntVector> sigma_rays,
                                      Eigen::Index rank) {
  std::vector<IntVector> gens(sublattice.begin(), sublattice.end());
  gens.insert(gens.end(), sigma_rays.begin(), sigma_rays.end());
  return lattice_index(gens, rank);
}

namespace {

IntVector unit(Eigen::Index n, Eigen::Index k) {
  IntVector e = IntVector::Zero(n);
  e(k) = 1;
  return e;
}

// Rays v_j for j >= 3 (zero-based 3..n), plus the listed surface rays.
std::vector<IntVector> j_cone(const AmbientFan& fan, std::initializer_list<int> extra) {
  std::vector<IntVector> out(fan.rays.begin() + 3, fan.rays.end());
  for (int i : extra) out.push_back(fan.rays[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

IntersectionReport verify_intersections(const AmbientFan& fan) {
  validate(fan);
  const Eigen::Index n = fan.dim();
  const WeightsTriple s = fan.surface_weights();
  IntersectionReport rep;

  BigInt q_product(1);
  for (const auto& q : fan.weights) q_product *= q;

  // [D_1]...[D_n] = 1/mult(omit 0) and [D_i] = q_i [A].
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    const auto rays = rays_omitting(fan, i);
    rep.multiplicities.push_back(cone_multiplicity(rays));
  }
  rep.a_power = make_rational(BigInt(1), rep.multiplicities[0] * (q_product / fan.weights[0]));
  rep.checks.push_back({"[A]^n = 1/prod(q)", rep.a_power, make_rational(BigInt(1), q_product)});
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    rep.checks.push_back({"1/mult(omit v" + std::to_string(i) + ") = prod_{j!=i} q_j [A]^n",
                          make_rational(BigInt(1), rep.multiplicities[i]),
                          Rational(q_product / fan.weights[i]) * rep.a_power});
  }

  // [C_1] on the plane spanned by e1 and e2: coefficients from Fulton-Sturmfels.
  const std::vector<IntVector> line{unit(n, 0)};
  const auto need = [](const std::optional<BigInt>& m, const char* what) {
    if (!m) throw ConsistencyError(std::string("Fulton-Sturmfels index is infinite for ") + what);
    return *m;
  };
  rep.fs_m0 = need(fs_multiplicity(line, j_cone(fan, {0}), n), "sigma_{J+0}");
  rep.fs_m1 = need(fs_multiplicity(line, j_cone(fan, {1}), n), "sigma_{J+1}");
  const std::vector<IntVector> plane_line{unit(2, 0)};
  const std::vector<IntVector> u2{fan.rays[2].head(2)};
  rep.fs_m2 = need(fs_multiplicity(plane_line, u2, 2), "u2");
  const BigInt y0 = fan.rays[0](1), y1 = fan.rays[1](1), y2 = fan.rays[2](1);
  rep.checks.push_back({"m_{J+0} = -y0", Rational(rep.fs_m0), Rational(-y0)});
  rep.checks.push_back({"m_{J+1} = -y1", Rational(rep.fs_m1), Rational(-y1)});
  rep.checks.push_back({"m_2 = |y2|", Rational(rep.fs_m2), Rational(abs_of(y2))});
  // [V_J].[D_i] = [V_{J+i}] / mult(J+i) and [D_i] = q_i [A].
  const BigInt mult_j0 = cone_multiplicity(j_cone(fan, {0}));
  const BigInt mult_j1 = cone_multiplicity(j_cone(fan, {1}));
  rep.checks.push_back({"[C_1] = c y2 [V_J].[A]",
                        Rational(rep.fs_m0 * s.a * mult_j0 + rep.fs_m1 * s.b * mult_j1),
                        Rational(y2 * s.c)});

  // On S: [B_0].[B_1] = 1/mult(u0, u1), [B_i] = q_i [B].
  const std::vector<IntVector> u01{fan.rays[0].head(2), fan.rays[1].head(2)};
  rep.b_squared = make_rational(BigInt(1), s.a * s.b * cone_multiplicity(u01));
  rep.checks.push_back({"[B]^2 = 1/abc", rep.b_squared, make_rational(BigInt(1), s.product())});

  // [B].[Y_j] = (1/a)(d_j/b) [V_J].[D_0].[D_1].
  const BigInt mult_j01 = cone_multiplicity(j_cone(fan, {0, 1}));
  for (std::size_t j = 3; j < fan.weights.size(); ++j) {
    const BigInt& d = fan.weights[j];
    rep.b_dot_y.push_back(make_rational(d, s.a * s.b * mult_j01));
    rep.checks.push_back({"[B].[Y_" + std::to_string(j) + "] = d/abc", rep.b_dot_y.back(), make_rational(d, s.product())});
  }

  for (const auto& c : rep.checks) {
    if (!c.ok()) throw ConsistencyError("intersection identity failed: " + c.name + " (" + c.lhs.str() + " vs " + c.rhs.str() + ")");
  }
  return rep;
}

bool negativity_check(const Rational& lambda, const Rational& mu, const BigInt& d, const BigInt& abc) {
  if (lambda <= 0 || mu <= 0) throw ArgumentError("negativity_check: lambda and mu must be positive");
  if (abc <= 0) throw ArgumentError("negativity_check: abc must be positive");
  return lambda * Rational(d) / Rational(abc) - mu < 0;
}

}  // namespace mds
