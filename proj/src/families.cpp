#include "mds/families.hpp"

#include <algorithm>
#include <cctype>

#include "mds/errors.hpp"

namespace mds {

std::string family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::GNW1: return "gnw1";
    case FamilyKind::GNW2: return "gnw2";
    case FamilyKind::GKT: return "gkt";
    case FamilyKind::AGK: return "agk";
  }
  return "?";
}

FamilyKind parse_family(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (s == "gnw1") return FamilyKind::GNW1;
  if (s == "gnw2") return FamilyKind::GNW2;
  if (s == "gkt" || s == "gk-t" || s == "gk_t") return FamilyKind::GKT;
  if (s == "agk") return FamilyKind::AGK;
  throw ArgumentError("unknown family '" + std::string(name) + "' (expected gnw1, gnw2, gkt or agk)");
}

bool FamilyMember::accepted() const {
  return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.ok; });
}

Rational FamilyMember::d_bound() const { return Rational(weights.product()) * curve.mu / curve.lambda; }

namespace {

// Member carrying a width-< 1 relation; the curve is c g pi^*B - e.
FamilyMember with_relation(FamilyKind kind, const BigInt& param, WeightsTriple w, const BigInt& e, const BigInt& f,
                           const BigInt& g, std::string provenance) {
  FamilyMember out;
  out.family = kind;
  out.param = param;
  out.weights = w;
  out.provenance = std::move(provenance);
  out.conditions.push_back({"pairwise coprime", w.pairwise_coprime()});
  const bool holds = w.a * e + w.b * f == w.c * g;
  out.conditions.push_back({"relation " + e.str() + "a + " + f.str() + "b = " + g.str() + "c", holds});
  Rational width = make_rational(w.c * g * g, w.a * w.b);
  out.conditions.push_back({"width < 1", width < 1});
  if (holds) out.relation = Relation{e, f, g, {0, 1, 2}, width};
  out.curve = {Rational(w.c * g), Rational(1)};
  return out;
}

void require_at_least(const BigInt& p, long long lo, const char* fam) {
  if (p < lo) throw ArgumentError(std::string(fam) + ": parameter must be >= " + std::to_string(lo));
}

}  // namespace

FamilyMember gnw1(const BigInt& m) {
  require_at_least(m, 4, "gnw1");
  auto out = with_relation(FamilyKind::GNW1, m, {7 * m - 3, 8 * m - 3, (5 * m - 2) * m}, m, m, BigInt(3), "gnw");
  out.conditions.insert(out.conditions.begin(), {"3 does not divide m", m % 3 != 0});
  return out;
}

FamilyMember gnw2(const BigInt& m) {
  require_at_least(m, 3, "gnw2");
  auto out = with_relation(FamilyKind::GNW2, m, {7 * m - 10, 8 * m - 3, 5 * m * m - 7 * m + 1}, m, m - 1, BigInt(3),
                           m < 5 ? "gk-criterion" : "gnw");
  out.conditions.insert(out.conditions.begin(),
                        {{"3 does not divide 7m-10", (7 * m - 10) % 3 != 0}, {"m != -7 mod 59", mod_floor(m + 7, BigInt(59)) != 0}});
  return out;
}

FamilyMember gk_t(const BigInt& t) {
  require_at_least(t, 0, "gkt");
  auto out = with_relation(FamilyKind::GKT, t, {BigInt(7), 15 + 2 * t, 26 + 3 * t}, BigInt(1), BigInt(3), BigInt(2), "gk");
  out.conditions.insert(out.conditions.begin(), {"7 does not divide t-3", mod_floor(t - 3, BigInt(7)) != 0});
  return out;
}

Rational agk_twice_area(const BigInt& m) {
  const BigInt s = m + 2;
  const Rational alpha = make_rational(BigInt(1), s * s);
  const Rational beta = make_rational(s * s + 1, s * s * s + 1);
  // Base on the x-axis from -alpha to m-1+beta, apex at height m+1.
  return (Rational(m - 1) + beta + alpha) * Rational(m + 1);
}

FamilyMember agk(const BigInt& m) {
  require_at_least(m, 1, "agk");
  const BigInt s = m + 2;
  FamilyMember out;
  out.family = FamilyKind::AGK;
  out.param = m;
  out.weights = {s * s, s * s * s + 1, s * s * s * (m * m + 2 * m - 1) + m * m + 3 * m + 1};
  out.provenance = "agk";
  out.curve = {Rational(out.weights.c * (m + 1)), Rational(m)};
  out.conditions.push_back({"pairwise coprime", out.weights.pairwise_coprime()});
  out.conditions.push_back({"2 Area = (m+1)^2 c/(ab)",
                            agk_twice_area(m) == make_rational((m + 1) * (m + 1) * out.weights.c, out.weights.a * out.weights.b)});
  return out;
}

FamilyMember family_member(FamilyKind k, const BigInt& param) {
  switch (k) {
    case FamilyKind::GNW1: return gnw1(param);
    case FamilyKind::GNW2: return gnw2(param);
    case FamilyKind::GKT: return gk_t(param);
    case FamilyKind::AGK: return agk(param);
  }
  throw ArgumentError("family_member: bad family");
}

BigInt family_min_param(FamilyKind k) {
  switch (k) {
    case FamilyKind::GNW1: return BigInt(4);
    case FamilyKind::GNW2: return BigInt(3);
    case FamilyKind::GKT: return BigInt(0);
    case FamilyKind::AGK: return BigInt(1);
  }
  return BigInt(0);
}

std::optional<FamilyMember> detect_family(const WeightsTriple& w) {
  std::vector<std::pair<FamilyKind, BigInt>> guesses;
  if (w.a == 7 && w.b >= 15 && (w.b - 15) % 2 == 0) guesses.emplace_back(FamilyKind::GKT, (w.b - 15) / 2);
  if ((w.a + 3) % 7 == 0) guesses.emplace_back(FamilyKind::GNW1, (w.a + 3) / 7);
  if ((w.a + 10) % 7 == 0) guesses.emplace_back(FamilyKind::GNW2, (w.a + 10) / 7);
  const BigInt root = boost::multiprecision::sqrt(w.a);
  if (root * root == w.a) guesses.emplace_back(FamilyKind::AGK, root - 2);
  for (const auto& [kind, p] : guesses) {
    if (p < family_min_param(kind)) continue;
    auto member = family_member(kind, p);
    if (member.weights == w && member.accepted()) return member;
  }
  return std::nullopt;
}

}  // namespace mds
