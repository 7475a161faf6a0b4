#include "mds/relations.hpp"

#include <algorithm>
#include <tuple>

#include "mds/errors.hpp"
#include "mds/lattice.hpp"

namespace mds {

namespace {

void require_positive(const WeightsTriple& w) {
  if (w.a <= 0 || w.b <= 0 || w.c <= 0) {
    throw ArgumentError("weights must be positive, got (" + w.a.str() + ", " + w.b.str() + ", " +
                        w.c.str() + ")");
  }
}

// Relations with cg^2 < ab have a e^2 < bc, b f^2 < ac and c g^2 < ab. The
// three ranges multiply to sqrt(abc), so looping over the variable with the
// smallest range and solving a linear congruence for the rest stays near
// (abc)^(1/6) steps.
void scan_slot(const WeightsTriple& w, const std::array<int, 3>& perm, const SearchLimits& limits,
               std::vector<Relation>& out) {
  const WeightsTriple p = w.permuted(perm);
  const BigInt &a = p.a, &b = p.b, &c = p.c;
  const BigInt ab = a * b;
  const std::size_t first = out.size();
  auto emit = [&](const BigInt& e, const BigInt& f, const BigInt& g) {
    if (limits.max_g > 0 && g > limits.max_g) return;
    if (gcd(gcd(e, f), g) != 1) return;
    out.push_back(Relation{e, f, g, perm, make_rational(c * g * g, ab)});
  };
  // g in the progression g0 + k step with c g > lower and c g^2 < ab.
  auto scan_g = [&](const BigInt& g0, const BigInt& step, const BigInt& lower, auto&& body) {
    BigInt g = g0;
    const BigInt g_min = floor_div(lower, c) + 1;
    if (g < g_min) g += step * ceil_div(g_min - g, step);
    for (; c * g * g < ab; g += step) {
      if (limits.max_g > 0 && g > limits.max_g) break;
      body(g);
    }
  };

  const BigInt range_e = b * c / a, range_f = a * c / b, range_g = ab / c;
  if (range_g <= range_e && range_g <= range_f) {
    for (BigInt g(1); c * g * g < ab; ++g) {
      if (limits.max_g > 0 && g > limits.max_g) break;
      const BigInt cg = c * g;
      const auto progression = linear_congruence(a, b, cg);
      if (!progression) continue;
      for (BigInt e = progression->first; a * e < cg; e += progression->second) emit(e, (cg - a * e) / b, g);
    }
  } else if (range_e <= range_f) {
    for (BigInt e(1); a * e * e < b * c; ++e) {
      const auto progression = linear_congruence(c, b, a * e);
      if (!progression) continue;
      scan_g(progression->first, progression->second, a * e,
             [&](const BigInt& g) { emit(e, (c * g - a * e) / b, g); });
    }
  } else {
    for (BigInt f(1); b * f * f < a * c; ++f) {
      const auto progression = linear_congruence(c, a, b * f);
      if (!progression) continue;
      scan_g(progression->first, progression->second, b * f,
             [&](const BigInt& g) { emit((c * g - b * f) / a, f, g); });
    }
  }
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end(),
            [](const Relation& x, const Relation& y) { return std::tie(x.g, x.e) < std::tie(y.g, y.e); });
}

}  // namespace

std::vector<Relation> narrow_relations(const WeightsTriple& w, const SearchLimits& limits) {
  require_positive(w);
  std::vector<Relation> out;
  for (const auto& perm : kRelationPerms) scan_slot(w, perm, limits, out);
  return out;
}

std::optional<Relation> find_relation(const WeightsTriple& w, const SearchLimits& limits) {
  require_positive(w);
  for (const auto& perm : kRelationPerms) {
    std::vector<Relation> found;
    scan_slot(w, perm, limits, found);
    if (!found.empty()) return found.front();
  }
  return std::nullopt;
}

Rational relation_width(const Relation& rel, const WeightsTriple& w) {
  const WeightsTriple p = w.permuted(rel.perm);
  if (rel.e <= 0 || rel.f <= 0 || rel.g <= 0 || p.a * rel.e + p.b * rel.f != p.c * rel.g) {
    throw ArgumentError("(" + rel.e.str() + ", " + rel.f.str() + ", -" + rel.g.str() +
                        ") is not a relation for the given weights");
  }
  return make_rational(p.c * rel.g * rel.g, p.a * p.b);
}

DistinguishedR find_r(const Relation& rel, const WeightsTriple& w) {
  const WeightsTriple p = w.permuted(rel.perm);
  std::optional<BigInt> found;
  for (BigInt r(1); r <= rel.g; ++r) {
    if ((rel.e * r - p.b) % rel.g == 0 && (rel.f * r + p.a) % rel.g == 0) {
      if (found) throw ConsistencyError("find_r: r is not unique (" + found->str() + ", " + r.str() + ")");
      found = r;
    }
  }
  if (!found) {
    throw ConsistencyError("find_r: no r in [1, " + rel.g.str() + "] for relation (" + rel.e.str() +
                           ", " + rel.f.str() + ", -" + rel.g.str() + ")");
  }
  return DistinguishedR{*found};
}

}  // namespace mds
