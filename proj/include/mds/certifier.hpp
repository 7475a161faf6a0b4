#pragma once

// Hypothesis checking for the non-MDS criteria on Bl_p P(a, b, c, d...), and
// the certificates that record every checked quantity.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mds/families.hpp"
#include "mds/fans.hpp"
#include "mds/gk.hpp"
#include "mds/relations.hpp"
#include "mds/semigroup.hpp"

namespace mds {

enum class Theorem { MAIN, GENERAL, COROLLARY_A, COROLLARY_AGK };
std::string theorem_name(Theorem t);
Theorem parse_theorem(std::string_view s);

enum class RejectCode { NOT_WELL_FORMED, NOT_PAIRWISE_COPRIME_ABC, NO_RELATION, NOT_IN_SEMIGROUP, BOUND_VIOLATED, NO_BASE_EVIDENCE };
std::string reject_code_name(RejectCode c);
RejectCode parse_reject_code(std::string_view s);

/// Evidence that the base P(a, b, c) has a non-MDS blow-up, as given by the caller.
struct EvidenceInput {
  enum class Kind { NONE, FAMILY, ASSERTED } kind = Kind::NONE;
  FamilyKind family = FamilyKind::GKT;
  BigInt param;
  std::string text;
};

/// "family:<name>:<param>" or "assert:<text>".
EvidenceInput parse_evidence(std::string_view spec);

struct BaseEvidence {
  enum class Kind { FAMILY, USER_ASSERTED } kind = Kind::FAMILY;
  std::string detail;
  std::optional<FamilyMember> member;
  friend bool operator==(const BaseEvidence&, const BaseEvidence&) = default;
};

struct BoundCheck {
  BigInt value;
  Rational bound;  // value must be strictly below
  bool ok = false;
  friend bool operator==(const BoundCheck&, const BoundCheck&) = default;
};

struct OverlapReport {
  bool is_overlap = false;   // d = c g for the width-< 1 relation (e, f, g)
  bool d_equals_cg = false;
  std::optional<QuadRelation> quad;
  /// Three-fold slice criterion on the tetrahedron of `quad`, stable over m, 2m, 3m.
  std::optional<bool> threefold_holds;
  BigInt threefold_m;
  friend bool operator==(const OverlapReport&, const OverlapReport&) = default;
};

struct Certificate {
  std::vector<BigInt> weights;
  Theorem theorem = Theorem::MAIN;
  std::optional<Relation> relation;
  std::optional<DistinguishedR> r;
  std::vector<SemigroupWitness> witnesses;
  std::vector<BoundCheck> bounds;
  std::optional<NegativeCurve> curve;
  BaseEvidence base_evidence;
  bool conditional = false;
  AmbientFan fan;
  std::optional<OverlapReport> overlap;
  std::vector<std::string> notes;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct RejectReason {
  RejectCode code;
  std::string detail;
  friend bool operator==(const RejectReason&, const RejectReason&) = default;
};

struct Rejection {
  std::vector<RejectReason> reasons;
  bool has(RejectCode c) const;
  friend bool operator==(const Rejection&, const Rejection&) = default;
};

using Outcome = std::variant<Certificate, Rejection>;

inline bool accepted(const Outcome& o) { return std::holds_alternative<Certificate>(o); }

/// Width-bound pipeline: a relation of width < 1, d_i in <a, b, c>, d_i^2 w < abc.
Outcome certify_main(const WeightsTriple& w, const std::vector<BigInt>& ds, const EvidenceInput& evidence = {},
                     const SearchLimits& limits = {});

/// Negative-curve pipeline: d_i in <a, b, c> and d_i < abc mu / lambda. The
/// curve defaults to the one carried by the evidence family.
Outcome certify_general(const WeightsTriple& w, const std::vector<BigInt>& ds,
                        const std::optional<NegativeCurve>& curve, const EvidenceInput& evidence = {},
                        const SearchLimits& limits = {});

/// P(a, b, c, a, ..., a) of dimension n; needs a < b < c.
Outcome certify_all_a(const WeightsTriple& w, int n, const EvidenceInput& evidence = {},
                      const SearchLimits& limits = {});

OverlapReport overlap_check(const std::array<BigInt, 4>& weights, const SearchLimits& limits = {});

/// Re-derives every stored quantity from the raw weights; returns the list of
/// discrepancies (empty when the certificate checks out).
std::vector<std::string> verify_certificate(const Certificate& cert);

}  // namespace mds
