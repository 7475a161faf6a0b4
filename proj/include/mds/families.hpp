#pragma once

// Known base surfaces P(a, b, c) whose blow-up is not a Mori dream space:
// the two GNW families, the GK family (7, 15+2t, 26+3t) and the AGK family.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mds/numeric.hpp"
#include "mds/relations.hpp"

namespace mds {

enum class FamilyKind { GNW1, GNW2, GKT, AGK };

std::string family_name(FamilyKind k);
/// Accepts gnw1, gnw2, gkt (also gk-t, gk_t), agk; case-insensitive.
FamilyKind parse_family(std::string_view name);

struct Condition {
  std::string name;
  bool ok = false;
  friend bool operator==(const Condition&, const Condition&) = default;
};

/// Class lambda pi^*B - mu e of a negative curve on the blow-up of S.
struct NegativeCurve {
  Rational lambda, mu;
  friend bool operator==(const NegativeCurve&, const NegativeCurve&) = default;
};

struct FamilyMember {
  FamilyKind family = FamilyKind::GKT;
  BigInt param;
  WeightsTriple weights;
  std::optional<Relation> relation;
  NegativeCurve curve;
  std::vector<Condition> conditions;
  /// Which source backs non-MDS-ness of the base: "gnw", "gk", "gk-criterion", "agk".
  std::string provenance;

  bool accepted() const;
  /// abc mu / lambda: extra weights d must stay strictly below this.
  Rational d_bound() const;
  friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

/// (7m-3, 8m-3, (5m-2)m), m >= 4, relation (m, m, 3).
FamilyMember gnw1(const BigInt& m);
/// (7m-10, 8m-3, 5m^2-7m+1), m >= 3, relation (m, m-1, 3).
FamilyMember gnw2(const BigInt& m);
/// (7, 15+2t, 26+3t), t >= 0, relation (1, 3, 2).
FamilyMember gk_t(const BigInt& t);
/// ((m+2)^2, (m+2)^3+1, (m+2)^3(m^2+2m-1)+m^2+3m+1), m >= 1, curve c(m+1) pi^*B - m e.
FamilyMember agk(const BigInt& m);

FamilyMember family_member(FamilyKind k, const BigInt& param);

/// Smallest parameter each family accepts as input.
BigInt family_min_param(FamilyKind k);

/// Twice the area of the AGK triangle (-alpha,0), (m-1+beta,0), (m,m+1).
Rational agk_twice_area(const BigInt& m);

/// An accepted family member with exactly these weights (in this order), if any.
std::optional<FamilyMember> detect_family(const WeightsTriple& w);

}  // namespace mds
