#include "mds/certifier.hpp"

#include <algorithm>

#include "mds/errors.hpp"
#include "mds/intersect.hpp"
#include "mds/lattice.hpp"

namespace mds {

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::MAIN: return "MAIN";
    case Theorem::GENERAL: return "GENERAL";
    case Theorem::COROLLARY_A: return "COROLLARY_A";
    case Theorem::COROLLARY_AGK: return "COROLLARY_AGK";
  }
  return "?";
}

Theorem parse_theorem(std::string_view s) {
  for (auto t : {Theorem::MAIN, Theorem::GENERAL, Theorem::COROLLARY_A, Theorem::COROLLARY_AGK}) {
    if (theorem_name(t) == s) return t;
  }
  throw ArgumentError("unknown theorem '" + std::string(s) + "'");
}

std::string reject_code_name(RejectCode c) {
  switch (c) {
    case RejectCode::NOT_WELL_FORMED: return "NOT_WELL_FORMED";
    case RejectCode::NOT_PAIRWISE_COPRIME_ABC: return "NOT_PAIRWISE_COPRIME_ABC";
    case RejectCode::NO_RELATION: return "NO_RELATION";
    case RejectCode::NOT_IN_SEMIGROUP: return "NOT_IN_SEMIGROUP";
    case RejectCode::BOUND_VIOLATED: return "BOUND_VIOLATED";
    case RejectCode::NO_BASE_EVIDENCE: return "NO_BASE_EVIDENCE";
  }
  return "?";
}

RejectCode parse_reject_code(std::string_view s) {
  for (auto c : {RejectCode::NOT_WELL_FORMED, RejectCode::NOT_PAIRWISE_COPRIME_ABC, RejectCode::NO_RELATION,
                 RejectCode::NOT_IN_SEMIGROUP, RejectCode::BOUND_VIOLATED, RejectCode::NO_BASE_EVIDENCE}) {
    if (reject_code_name(c) == s) return c;
  }
  throw ArgumentError("unknown rejection code '" + std::string(s) + "'");
}

bool Rejection::has(RejectCode c) const {
  return std::any_of(reasons.begin(), reasons.end(), [&](const RejectReason& r) { return r.code == c; });
}

EvidenceInput parse_evidence(std::string_view spec) {
  EvidenceInput in;
  if (spec.starts_with("assert:")) {
    in.kind = EvidenceInput::Kind::ASSERTED;
    in.text = std::string(spec.substr(7));
    if (in.text.empty()) throw ArgumentError("evidence 'assert:' needs a description");
    return in;
  }
  if (spec.starts_with("family:")) {
    const auto rest = spec.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ArgumentError("evidence must be family:<name>:<param>");
    in.kind = EvidenceInput::Kind::FAMILY;
    in.family = parse_family(rest.substr(0, colon));
    in.param = parse_bigint(rest.substr(colon + 1));
    in.text = std::string(spec);
    return in;
  }
  throw ArgumentError("evidence must be family:<name>:<param> or assert:<text>, got '" + std::string(spec) + "'");
}

namespace {

std::string join(const std::vector<BigInt>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].str();
  return s;
}

std::vector<BigInt> all_weights(const WeightsTriple& w, const std::vector<BigInt>& ds) {
  std::vector<BigInt> q{w.a, w.b, w.c};
  q.insert(q.end(), ds.begin(), ds.end());
  return q;
}

// Index i whose removal leaves weights with a common factor, if any.
std::optional<std::size_t> well_formed_failure(const std::vector<BigInt>& q) {
  for (std::size_t i = 0; i < q.size(); ++i) {
    BigInt g(0);
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (j != i) g = gcd(g, q[j]);
    }
    if (g != 1) return i;
  }
  return std::nullopt;
}

struct Common {
  std::vector<RejectReason> reasons;
  std::vector<SemigroupWitness> witnesses;
  std::optional<BaseEvidence> evidence;
};

void check_inputs(const WeightsTriple& w, const std::vector<BigInt>& ds) {
  if (ds.empty()) throw ArgumentError("certify: need at least one extra weight d");
  for (const auto& q : all_weights(w, ds)) {
    if (q <= 0) throw ArgumentError("certify: weights must be positive");
  }
}

void check_structure(const WeightsTriple& w, const std::vector<BigInt>& ds, Common& out) {
  const auto q = all_weights(w, ds);
  if (auto i = well_formed_failure(q)) {
    out.reasons.push_back({RejectCode::NOT_WELL_FORMED,
                           "weights without q" + std::to_string(*i) + " share a factor in (" + join(q) + ")"});
  }
  if (!w.pairwise_coprime()) {
    out.reasons.push_back({RejectCode::NOT_PAIRWISE_COPRIME_ABC, "(" + join({w.a, w.b, w.c}) + ") not pairwise coprime"});
  }
  for (const auto& d : ds) {
    if (auto wit = member(d, w)) {
      out.witnesses.push_back(*wit);
    } else {
      out.reasons.push_back({RejectCode::NOT_IN_SEMIGROUP, d.str() + " is not in <" + join({w.a, w.b, w.c}) + ">"});
    }
  }
}

void resolve_evidence(const WeightsTriple& w, const EvidenceInput& in, Common& out) {
  switch (in.kind) {
    case EvidenceInput::Kind::ASSERTED:
      out.evidence = BaseEvidence{BaseEvidence::Kind::USER_ASSERTED, in.text, std::nullopt};
      return;
    case EvidenceInput::Kind::FAMILY: {
      const std::string label = family_name(in.family) + ":" + in.param.str();
      if (in.param < family_min_param(in.family)) {
        out.reasons.push_back({RejectCode::NO_BASE_EVIDENCE, label + ": parameter below the family's range"});
        return;
      }
      auto m = family_member(in.family, in.param);
      std::string failed;
      for (const auto& c : m.conditions) {
        if (!c.ok) failed += (failed.empty() ? "" : "; ") + c.name;
      }
      if (!failed.empty()) {
        out.reasons.push_back({RejectCode::NO_BASE_EVIDENCE, label + " is not a member: " + failed});
      } else if (!(m.weights == w)) {
        out.reasons.push_back({RejectCode::NO_BASE_EVIDENCE, label + " has weights (" +
                                                                 join({m.weights.a, m.weights.b, m.weights.c}) +
                                                                 "), not (" + join({w.a, w.b, w.c}) + ")"});
      } else {
        out.evidence = BaseEvidence{BaseEvidence::Kind::FAMILY, label + " (" + m.provenance + ")", m};
      }
      return;
    }
    case EvidenceInput::Kind::NONE:
      if (auto m = detect_family(w)) {
        out.evidence = BaseEvidence{BaseEvidence::Kind::FAMILY,
                                    family_name(m->family) + ":" + m->param.str() + " (" + m->provenance + ")", *m};
      } else {
        out.reasons.push_back({RejectCode::NO_BASE_EVIDENCE, "no known family matches and no evidence was given"});
      }
      return;
  }
}

// Bound for the width pipeline: d^2 w < abc, stored as the threshold ab/g.
BoundCheck width_bound(const BigInt& d, const Relation& rel, const WeightsTriple& w) {
  const WeightsTriple s = w.permuted(rel.perm);
  BoundCheck b{d, make_rational(s.a * s.b, rel.g), false};
  b.ok = Rational(d * d) * rel.width < Rational(w.product());
  return b;
}

}  // namespace

OverlapReport overlap_check(const std::array<BigInt, 4>& weights, const SearchLimits& limits) {
  OverlapReport rep;
  const WeightsTriple w{weights[0], weights[1], weights[2]};
  if (auto rel = find_relation(w, limits)) {
    rep.d_equals_cg = weights[3] == w.permuted(rel->perm).c * rel->g;
    rep.is_overlap = rep.d_equals_cg;
  }
  rep.quad = find_quad_relation(weights);
  if (rep.quad && rep.quad->W < 1) {
    try {
      const auto poly = gk_polytope_3d(*rep.quad, weights);
      rep.threefold_m = default_scale(poly);
      const auto stable = evaluate_stable([&](const BigInt& m) { return gk_3fold_criterion(poly, m); },
                                          rep.threefold_m, default_multipliers());
      rep.threefold_holds = stable.holds;
    } catch (const GeometryError&) {
    } catch (const StabilityError&) {
    }
  }
  return rep;
}

Outcome certify_main(const WeightsTriple& w, const std::vector<BigInt>& ds, const EvidenceInput& evidence,
                     const SearchLimits& limits) {
  check_inputs(w, ds);
  Common common;
  check_structure(w, ds, common);
  const auto rel = find_relation(w, limits);
  if (!rel) {
    common.reasons.push_back({RejectCode::NO_RELATION, "no relation of width < 1 between (" + join({w.a, w.b, w.c}) + ")"});
  }
  std::vector<BoundCheck> bounds;
  if (rel) {
    for (const auto& d : ds) {
      bounds.push_back(width_bound(d, *rel, w));
      if (!bounds.back().ok) {
        common.reasons.push_back({RejectCode::BOUND_VIOLATED, "d = " + d.str() + " fails d^2 w < abc (needs d < " +
                                                                  bounds.back().bound.str() + ")"});
      }
    }
  }
  resolve_evidence(w, evidence, common);
  if (!common.reasons.empty()) return Rejection{common.reasons};

  Certificate cert;
  cert.weights = all_weights(w, ds);
  cert.theorem = Theorem::MAIN;
  cert.relation = rel;
  cert.r = find_r(*rel, w);
  cert.witnesses = common.witnesses;
  cert.bounds = bounds;
  cert.base_evidence = *common.evidence;
  cert.conditional = cert.base_evidence.kind == BaseEvidence::Kind::USER_ASSERTED;
  cert.fan = ambient_fan(surface_fan(*rel, w), ds);
  if (ds.size() == 1) cert.overlap = overlap_check({w.a, w.b, w.c, ds[0]}, limits);
  return cert;
}

Outcome certify_general(const WeightsTriple& w, const std::vector<BigInt>& ds,
                        const std::optional<NegativeCurve>& curve_in, const EvidenceInput& evidence,
                        const SearchLimits& limits) {
  check_inputs(w, ds);
  if (curve_in && (curve_in->lambda <= 0 || curve_in->mu <= 0)) {
    throw ArgumentError("certify_general: lambda and mu must be positive");
  }
  Common common;
  check_structure(w, ds, common);
  resolve_evidence(w, evidence, common);

  std::optional<NegativeCurve> curve = curve_in;
  bool from_agk = false;
  if (!curve && common.evidence && common.evidence->member) {
    curve = common.evidence->member->curve;
    from_agk = common.evidence->member->family == FamilyKind::AGK;
  }
  if (!curve) {
    common.reasons.push_back({RejectCode::NO_BASE_EVIDENCE, "no negative curve was given and the evidence carries none"});
  }
  std::vector<BoundCheck> bounds;
  if (curve) {
    const Rational bound = Rational(w.product()) * curve->mu / curve->lambda;
    for (const auto& d : ds) {
      bounds.push_back({d, bound, Rational(d) < bound});
      if (!bounds.back().ok) {
        common.reasons.push_back({RejectCode::BOUND_VIOLATED, "d = " + d.str() + " is not below abc mu/lambda = " + bound.str()});
      }
    }
  }
  if (!common.reasons.empty()) return Rejection{common.reasons};

  Certificate cert;
  cert.weights = all_weights(w, ds);
  cert.theorem = from_agk ? Theorem::COROLLARY_AGK : Theorem::GENERAL;
  cert.relation = find_relation(w, limits);
  if (cert.relation) cert.r = find_r(*cert.relation, w);
  cert.witnesses = common.witnesses;
  cert.bounds = bounds;
  cert.curve = curve;
  cert.base_evidence = *common.evidence;
  cert.conditional = cert.base_evidence.kind == BaseEvidence::Kind::USER_ASSERTED;
  cert.fan = ambient_fan(cert.relation ? surface_fan(*cert.relation, w) : plane_fan(w), ds);
  if (ds.size() == 1) cert.overlap = overlap_check({w.a, w.b, w.c, ds[0]}, limits);
  return cert;
}

Outcome certify_all_a(const WeightsTriple& w, int n, const EvidenceInput& evidence, const SearchLimits& limits) {
  if (!(w.a < w.b && w.b < w.c)) throw ArgumentError("certify_all_a: needs a < b < c");
  if (n < 3) throw ArgumentError("certify_all_a: dimension must be >= 3");
  auto out = certify_main(w, std::vector<BigInt>(static_cast<std::size_t>(n - 2), w.a), evidence, limits);
  if (auto* cert = std::get_if<Certificate>(&out)) {
    cert->theorem = Theorem::COROLLARY_A;
    cert->notes.push_back("bound automatic: a^2 w < a^2 < abc");
  }
  return out;
}

std::vector<std::string> verify_certificate(const Certificate& cert) {
  std::vector<std::string> bad;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) bad.push_back(what);
  };
  const auto& q = cert.weights;
  if (q.size() < 4) return {"fewer than four weights"};
  for (const auto& x : q) {
    if (x <= 0) return {"non-positive weight"};
  }
  const WeightsTriple w{q[0], q[1], q[2]};
  const std::vector<BigInt> ds(q.begin() + 3, q.end());
  expect(!well_formed_failure(q), "weights are not well-formed");
  expect(w.pairwise_coprime(), "a, b, c not pairwise coprime");

  expect(cert.witnesses.size() == ds.size(), "one semigroup witness per d");
  for (std::size_t i = 0; i < std::min(ds.size(), cert.witnesses.size()); ++i) {
    const auto& m = cert.witnesses[i];
    expect(m.m0 >= 0 && m.m1 >= 0 && m.m2 >= 0 && m.evaluate(w) == ds[i], "witness for d = " + ds[i].str());
  }

  if (cert.relation) {
    try {
      expect(relation_width(*cert.relation, w) == cert.relation->width, "stored width");
      expect(cert.relation->width < 1, "width < 1");
      expect(cert.r && find_r(*cert.relation, w) == *cert.r, "distinguished r");
    } catch (const std::exception& e) {
      bad.push_back(std::string("relation: ") + e.what());
    }
  } else {
    expect(cert.theorem == Theorem::GENERAL || cert.theorem == Theorem::COROLLARY_AGK, "width pipeline without relation");
  }

  expect(cert.bounds.size() == ds.size(), "one bound per d");
  const bool width_form = cert.theorem == Theorem::MAIN || cert.theorem == Theorem::COROLLARY_A;
  for (std::size_t i = 0; i < std::min(ds.size(), cert.bounds.size()); ++i) {
    const auto& b = cert.bounds[i];
    expect(b.value == ds[i], "bound value");
    expect(b.ok, "bound flag for d = " + ds[i].str());
    if (width_form && cert.relation) {
      const auto again = width_bound(ds[i], *cert.relation, w);
      expect(again == b, "width bound for d = " + ds[i].str());
      expect(again.ok == (Rational(ds[i]) < again.bound), "width and threshold forms agree");
    } else if (cert.curve) {
      expect(b.bound == Rational(w.product()) * cert.curve->mu / cert.curve->lambda, "curve bound");
      expect((Rational(b.value) < b.bound) == b.ok, "curve bound flag");
    } else {
      bad.push_back("bound with neither relation nor curve");
    }
  }
  if (cert.theorem == Theorem::COROLLARY_A) {
    expect(std::all_of(ds.begin(), ds.end(), [&](const BigInt& d) { return d == w.a; }), "all extra weights equal a");
  }

  const auto& ev = cert.base_evidence;
  expect(cert.conditional == (ev.kind == BaseEvidence::Kind::USER_ASSERTED), "conditional flag");
  if (ev.kind == BaseEvidence::Kind::FAMILY) {
    if (!ev.member) {
      bad.push_back("family evidence without member");
    } else {
      expect(family_member(ev.member->family, ev.member->param) == *ev.member, "family member data");
      expect(ev.member->accepted() && ev.member->weights == w, "family member matches weights");
      if (cert.theorem == Theorem::COROLLARY_AGK) {
        expect(cert.curve && *cert.curve == ev.member->curve, "AGK curve");
      }
    }
  }

  try {
    validate(cert.fan);
    const auto rebuilt = ambient_fan(cert.relation ? surface_fan(*cert.relation, w) : plane_fan(w), ds);
    expect(rebuilt == cert.fan, "fan differs from the rebuilt fan");
  } catch (const std::exception& e) {
    bad.push_back(std::string("fan: ") + e.what());
  }

  if (cert.overlap) {
    expect(ds.size() == 1 && overlap_check({w.a, w.b, w.c, ds[0]}) == *cert.overlap, "overlap report");
  }
  return bad;
}

}  // namespace mds
