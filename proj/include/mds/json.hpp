#pragma once

// JSON encoding of reports and certificates. Integers that fit in 64 bits are
// plain numbers, larger ones are decimal strings; rationals are [num, den].

#include <json.hpp>

#include "mds/certifier.hpp"
#include "mds/fans.hpp"
#include "mds/families.hpp"
#include "mds/gk.hpp"
#include "mds/intersect.hpp"
#include "mds/polytope.hpp"

namespace mds {

using json = nlohmann::ordered_json;

json encode(const BigInt& x);
json encode(const Rational& q);
json encode(const IntVector& v);
json encode(const RatVector& v);
json encode(const std::vector<BigInt>& xs);
json encode(const WeightsTriple& w);
json encode(const Relation& rel);
json encode(const SemigroupWitness& w);
json encode(const SurfaceFan& fan);
json encode(const AmbientFan& fan);
json encode(const TriangleDelta& t);
json encode(const GKTriangle& t);
json encode(const CriterionReport& r);
json encode(const StableReport& r);
json encode(const SurfaceCheck& s);
json encode(const QuadRelation& q);
json encode(const GKPolytope3& d);
json encode(const IntersectionReport& r);
json encode(const ProjectionReport& r);
json encode(const FamilyMember& m);
json encode(const OverlapReport& o);
json encode(const Certificate& c);
json encode(const Rejection& r);
json encode(const Outcome& o);

BigInt decode_bigint(const json& j);
Rational decode_rational(const json& j);
IntVector decode_int_vector(const json& j);
Relation decode_relation(const json& j);
AmbientFan decode_ambient_fan(const json& j);
FamilyMember decode_family_member(const json& j);
QuadRelation decode_quad_relation(const json& j);
OverlapReport decode_overlap(const json& j);
Certificate decode_certificate(const json& j);
Rejection decode_rejection(const json& j);
/// Dispatches on the "status" field ("certified" or "rejected").
Outcome decode_outcome(const json& j);

}  // namespace mds
