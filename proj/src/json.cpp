#include "mds/json.hpp"

#include <limits>

#include "mds/errors.hpp"

namespace mds {

json encode(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

json encode(const Rational& q) { return json::array({encode(numerator_of(q)), encode(denominator_of(q))}); }

json encode(const IntVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i)));
  return out;
}

json encode(const RatVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(encode(v(i)));
  return out;
}

json encode(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(encode(x));
  return out;
}

namespace {

json encode_all(const auto& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(encode(x));
  return out;
}

template <typename T>
json encode_opt(const std::optional<T>& x) {
  return x ? encode(*x) : json(nullptr);
}

json encode_perm(const auto& perm) {
  json out = json::array();
  for (int p : perm) out.push_back(p);
  return out;
}

}  // namespace

json encode(const WeightsTriple& w) { return encode(std::vector<BigInt>{w.a, w.b, w.c}); }

json encode(const Relation& rel) {
  return {{"e", encode(rel.e)}, {"f", encode(rel.f)}, {"g", encode(rel.g)}, {"perm", encode_perm(rel.perm)},
          {"width", encode(rel.width)}};
}

json encode(const SemigroupWitness& w) { return json::array({encode(w.m0), encode(w.m1), encode(w.m2)}); }

json encode(const SurfaceFan& fan) {
  return {{"weights", encode(fan.weights)},
          {"perm", encode_perm(fan.perm)},
          {"rays", encode_all(fan.rays)},
          {"r", encode_opt(fan.r)}};
}

json encode(const AmbientFan& fan) {
  return {{"weights", encode(fan.weights)},
          {"perm", encode_perm(fan.perm)},
          {"rays", encode_all(fan.rays)},
          {"witnesses", encode_all(fan.witnesses)}};
}

json encode(const TriangleDelta& t) { return {{"vertices", encode_all(t.vertices)}, {"width", encode(t.width)}}; }

json encode(const GKTriangle& t) {
  return {{"P_L", encode(t.left)}, {"P_R", encode(t.right)}, {"width", encode(t.width)}, {"s2", encode(t.s2)}};
}

json encode(const CriterionReport& r) {
  return {{"m", encode(r.m)},
          {"n", encode(r.n)},
          {"left_x", encode(r.left_x)},
          {"right_x", encode(r.right_x)},
          {"right_size", encode(r.right_size)},
          {"slices_match", r.slices_match},
          {"slope_condition", r.slope_condition},
          {"holds", r.holds}};
}

json encode(const StableReport& r) { return {{"holds", r.holds}, {"scales", encode_all(r.per_scale)}}; }

json encode(const SurfaceCheck& s) {
  return {{"holds", s.holds},
          {"triangle", encode(s.triangle)},
          {"direct", encode(s.direct)},
          {"mirror", encode(s.mirror)},
          {"mirrored", encode(s.mirrored)}};
}

json encode(const QuadRelation& q) {
  return {{"e", encode(q.e)}, {"f", encode(q.f)}, {"g1", encode(q.g1)}, {"g2", encode(q.g2)},
          {"perm", encode_perm(q.perm)}, {"W", encode(q.W)}};
}

json encode(const GKPolytope3& d) {
  return {{"P_L", encode(d.left)},   {"P_R", encode(d.right)}, {"width", encode(d.width)}, {"s_y", encode(d.sy)},
          {"s_z", encode(d.sz)},     {"rays", encode_all(d.rays)}, {"weights", encode_all(d.weights)}};
}

json encode(const IntersectionReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"lhs", encode(c.lhs)}, {"rhs", encode(c.rhs)}, {"ok", c.ok()}});
  }
  return {{"A^n", encode(r.a_power)},
          {"multiplicities", encode(r.multiplicities)},
          {"fs", encode(std::vector<BigInt>{r.fs_m0, r.fs_m1, r.fs_m2})},
          {"B^2", encode(r.b_squared)},
          {"B.Y", encode_all(r.b_dot_y)},
          {"checks", checks}};
}

json encode(const ProjectionReport& r) {
  return {{"q_normals", encode_all(r.q.normals)},
          {"q_supports", encode(r.q.supports)},
          {"q_vertices", encode_all(r.q.vertices)},
          {"q_is_lattice_triangle", r.q_is_lattice_triangle},
          {"vertices_are_projections", r.vertices_are_projections},
          {"q_normal_rays", encode_all(r.q_normal_rays)},
          {"normal_fan_matches", r.normal_fan_matches},
          {"image_of_lattice_points", r.image_of_lattice_points},
          {"lattice_points_of_image", r.lattice_points_of_image},
          {"q_lattice_points", r.q_lattice_points},
          {"projection_commutes", r.projection_commutes},
          {"image_equals_q", r.image_equals_q},
          {"columns_scanned", r.columns_scanned}};
}

json encode(const FamilyMember& m) {
  json conds = json::array();
  for (const auto& c : m.conditions) conds.push_back({{"name", c.name}, {"ok", c.ok}});
  return {{"family", family_name(m.family)},
          {"param", encode(m.param)},
          {"weights", encode(m.weights)},
          {"relation", encode_opt(m.relation)},
          {"negative_curve", {{"lambda", encode(m.curve.lambda)}, {"mu", encode(m.curve.mu)}}},
          {"conditions", conds},
          {"provenance", m.provenance},
          {"accepted", m.accepted()}};
}

json encode(const OverlapReport& o) {
  return {{"is_gk_overlap", o.is_overlap},
          {"d_equals_cg", o.d_equals_cg},
          {"quad", encode_opt(o.quad)},
          {"threefold_holds", o.threefold_holds ? json(*o.threefold_holds) : json(nullptr)},
          {"threefold_m", encode(o.threefold_m)}};
}

json encode(const Certificate& c) {
  json bounds = json::array();
  for (const auto& b : c.bounds) bounds.push_back({{"value", encode(b.value)}, {"bound", encode(b.bound)}, {"ok", b.ok}});
  json evidence = {{"kind", c.base_evidence.kind == BaseEvidence::Kind::FAMILY ? "family" : "user-asserted"},
                   {"detail", c.base_evidence.detail},
                   {"member", encode_opt(c.base_evidence.member)}};
  json curve = c.curve ? json{{"lambda", encode(c.curve->lambda)}, {"mu", encode(c.curve->mu)}} : json(nullptr);
  return {{"status", "certified"},
          {"weights", encode(c.weights)},
          {"theorem", theorem_name(c.theorem)},
          {"conditional", c.conditional},
          {"relation", encode_opt(c.relation)},
          {"r", c.r ? encode(c.r->r) : json(nullptr)},
          {"witnesses", encode_all(c.witnesses)},
          {"bounds", bounds},
          {"negative_curve", curve},
          {"base_evidence", evidence},
          {"fan", encode(c.fan)},
          {"overlap", encode_opt(c.overlap)},
          {"notes", c.notes}};
}

json encode(const Rejection& r) {
  json reasons = json::array();
  for (const auto& x : r.reasons) reasons.push_back({{"code", reject_code_name(x.code)}, {"detail", x.detail}});
  return {{"status", "rejected"}, {"reasons", reasons}};
}

json encode(const Outcome& o) {
  return std::visit([](const auto& x) { return encode(x); }, o);
}

BigInt decode_bigint(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw ArgumentError("expected an integer, got " + j.dump());
}

Rational decode_rational(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ArgumentError("expected [num, den], got " + j.dump());
  return make_rational(decode_bigint(j[0]), decode_bigint(j[1]));
}

IntVector decode_int_vector(const json& j) {
  IntVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = decode_bigint(j[i]);
  return v;
}

namespace {

std::vector<BigInt> decode_bigints(const json& j) {
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(decode_bigint(x));
  return out;
}

WeightsTriple decode_triple(const json& j) {
  const auto xs = decode_bigints(j);
  if (xs.size() != 3) throw ArgumentError("expected three weights");
  return {xs[0], xs[1], xs[2]};
}

template <std::size_t N>
std::array<int, N> decode_perm(const json& j) {
  std::array<int, N> p{};
  if (j.size() != N) throw ArgumentError("bad permutation length");
  for (std::size_t i = 0; i < N; ++i) p[i] = j[i].get<int>();
  return p;
}

SemigroupWitness decode_witness(const json& j) {
  return {decode_bigint(j.at(0)), decode_bigint(j.at(1)), decode_bigint(j.at(2))};
}

NegativeCurve decode_curve(const json& j) { return {decode_rational(j.at("lambda")), decode_rational(j.at("mu"))}; }

}  // namespace

Relation decode_relation(const json& j) {
  return {decode_bigint(j.at("e")), decode_bigint(j.at("f")), decode_bigint(j.at("g")), decode_perm<3>(j.at("perm")),
          decode_rational(j.at("width"))};
}

AmbientFan decode_ambient_fan(const json& j) {
  AmbientFan fan;
  fan.weights = decode_bigints(j.at("weights"));
  fan.perm = decode_perm<3>(j.at("perm"));
  for (const auto& r : j.at("rays")) fan.rays.push_back(decode_int_vector(r));
  for (const auto& w : j.at("witnesses")) fan.witnesses.push_back(decode_witness(w));
  return fan;
}

FamilyMember decode_family_member(const json& j) {
  FamilyMember m;
  m.family = parse_family(j.at("family").get<std::string>());
  m.param = decode_bigint(j.at("param"));
  m.weights = decode_triple(j.at("weights"));
  if (!j.at("relation").is_null()) m.relation = decode_relation(j.at("relation"));
  m.curve = decode_curve(j.at("negative_curve"));
  for (const auto& c : j.at("conditions")) m.conditions.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>()});
  m.provenance = j.at("provenance").get<std::string>();
  return m;
}

QuadRelation decode_quad_relation(const json& j) {
  return {decode_bigint(j.at("e")),  decode_bigint(j.at("f")),     decode_bigint(j.at("g1")),
          decode_bigint(j.at("g2")), decode_perm<4>(j.at("perm")), decode_rational(j.at("W"))};
}

OverlapReport decode_overlap(const json& j) {
  OverlapReport o;
  o.is_overlap = j.at("is_gk_overlap").get<bool>();
  o.d_equals_cg = j.at("d_equals_cg").get<bool>();
  if (!j.at("quad").is_null()) o.quad = decode_quad_relation(j.at("quad"));
  if (!j.at("threefold_holds").is_null()) o.threefold_holds = j.at("threefold_holds").get<bool>();
  o.threefold_m = decode_bigint(j.at("threefold_m"));
  return o;
}

Certificate decode_certificate(const json& j) {
  if (j.at("status") != "certified") throw ArgumentError("not a certificate");
  Certificate c;
  c.weights = decode_bigints(j.at("weights"));
  c.theorem = parse_theorem(j.at("theorem").get<std::string>());
  c.conditional = j.at("conditional").get<bool>();
  if (!j.at("relation").is_null()) c.relation = decode_relation(j.at("relation"));
  if (!j.at("r").is_null()) c.r = DistinguishedR{decode_bigint(j.at("r"))};
  for (const auto& w : j.at("witnesses")) c.witnesses.push_back(decode_witness(w));
  for (const auto& b : j.at("bounds")) {
    c.bounds.push_back({decode_bigint(b.at("value")), decode_rational(b.at("bound")), b.at("ok").get<bool>()});
  }
  if (!j.at("negative_curve").is_null()) c.curve = decode_curve(j.at("negative_curve"));
  const auto& ev = j.at("base_evidence");
  const auto kind = ev.at("kind").get<std::string>();
  if (kind == "family") {
    c.base_evidence.kind = BaseEvidence::Kind::FAMILY;
  } else if (kind == "user-asserted") {
    c.base_evidence.kind = BaseEvidence::Kind::USER_ASSERTED;
  } else {
    throw ArgumentError("unknown evidence kind '" + kind + "'");
  }
  c.base_evidence.detail = ev.at("detail").get<std::string>();
  if (!ev.at("member").is_null()) c.base_evidence.member = decode_family_member(ev.at("member"));
  c.fan = decode_ambient_fan(j.at("fan"));
  if (!j.at("overlap").is_null()) c.overlap = decode_overlap(j.at("overlap"));
  c.notes = j.at("notes").get<std::vector<std::string>>();
  return c;
}

Rejection decode_rejection(const json& j) {
  if (j.at("status") != "rejected") throw ArgumentError("not a rejection");
  Rejection r;
  for (const auto& x : j.at("reasons")) {
    r.reasons.push_back({parse_reject_code(x.at("code").get<std::string>()), x.at("detail").get<std::string>()});
  }
  return r;
}

Outcome decode_outcome(const json& j) {
  if (j.at("status") == "certified") return decode_certificate(j);
  return decode_rejection(j);
}

}  // namespace mds
