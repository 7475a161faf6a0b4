#pragma once

// Intersection numbers on P(a, b, c, d...) and on the surface S = V_J,
// checked against their closed forms. Every class group involved has rank 1,
// so classes are rational multiples of [A] (on X) or [B] (on S).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mds/fans.hpp"
#include "mds/numeric.hpp"

namespace mds {

struct DivisorClass {
  Rational coeff;  // multiple of the generator class
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Index of the lattice spanned by `rays` in its saturation. Throws
/// ArgumentError on dependent rays.
BigInt cone_multiplicity(std::span<const IntVector> rays);

/// [N : L + N_sigma] in N = Z^rank; nullopt when L + N_sigma is not of full rank.
std::optional<BigInt> fs_multiplicity(std::span<const IntVector> sublattice, std::span<const IntVector> sigma_rays,
                                      Eigen::Index rank);

struct IdentityCheck {
  std::string name;
  Rational lhs, rhs;
  bool ok() const { return lhs == rhs; }
};

struct IntersectionReport {
  Rational a_power;                   // [A]^n
  std::vector<BigInt> multiplicities; // cone omitting v_i, per i
  BigInt fs_m0, fs_m1, fs_m2;         // coefficients of [C_1]
  Rational b_squared;                 // [B]^2 on S
  std::vector<Rational> b_dot_y;      // [B].[Y_j], one per d_j
  std::vector<IdentityCheck> checks;
};

/// Recomputes the rank-1 products from cone multiplicities and compares them
/// with the closed forms. Throws ConsistencyError naming the first identity
/// that fails; the returned report lists all of them.
IntersectionReport verify_intersections(const AmbientFan& fan);

/// lambda d / abc - mu < 0, for a curve lambda pi^*B - mu e.
bool negativity_check(const Rational& lambda, const Rational& mu, const BigInt& d, const BigInt& abc);

}  // namespace mds
