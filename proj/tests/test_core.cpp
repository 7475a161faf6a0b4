#include <doctest.h>

#include <numeric>
#include <random>

#include "mds/errors.hpp"
#include "mds/lattice.hpp"
#include "mds/relations.hpp"
#include "mds/semigroup.hpp"
#include "oracles.hpp"

using namespace mds;

namespace {

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<IntVector> out;
  for (auto r : rows) out.push_back(int_vector(r));
  return out;
}

}  // namespace

TEST_CASE("gcd_all and primitivity") {
  CHECK(gcd_all(big_ints({6, 10, 15})) == 1);
  CHECK(gcd_all(big_ints({0, 0})) == 0);
  CHECK(gcd_all(big_ints({-4, 6})) == 2);
  CHECK(gcd_all(big_ints({25, 29})) == 1);
  CHECK(WeightsTriple{BigInt(25), BigInt(29), BigInt(72)}.pairwise_coprime());
  CHECK(is_primitive(int_vector({-7, -1, -1})));
  CHECK_FALSE(is_primitive(int_vector({2, 4})));
  CHECK(is_primitive(int_vector({0, 0, 1})));
  CHECK(primitive_part(int_vector({-4, 6})) == int_vector({-2, 3}));
  CHECK_THROWS_AS(primitive_part(int_vector({0, 0})), ArgumentError);
  const RatVector q = make_vector<Rational>({make_rational(BigInt(2), BigInt(15)), make_rational(BigInt(-1), BigInt(15))});
  CHECK(primitive_along(q) == int_vector({2, -1}));
}

TEST_CASE("determinants") {
  CHECK(det(vecs({{5, -3, -1}, {-1, 2, 0}, {0, 0, 1}})) == 7);
  CHECK(det(vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(abs_of(det(vecs({{-7, -1}, {5, -3}}))) == 26);
  CHECK_THROWS_AS(det(vecs({{1, 2, 3}, {4, 5, 6}})), ArgumentError);
}

TEST_CASE("determinant: Bareiss and Smith agree with cofactor expansion") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> entry(-20, 20), size(1, 5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = size(rng);
    IntMatrix m(n, n);
    std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        m(i, j) = entry(rng);
        rows[i][j] = m(i, j);
      }
    }
    // Every tenth matrix made singular on purpose.
    if (trial % 10 == 0 && n > 1) {
      m.row(n - 1) = m.row(0) * BigInt(3);
      for (int j = 0; j < n; ++j) rows[n - 1][j] = m(n - 1, j);
    }
    const BigInt expected = oracle::cofactor_det(rows);
    CHECK(determinant(m) == expected);
    CHECK(determinant_via_smith(m) == expected);
    if (expected != 0) {
      std::vector<IntVector> cols;
      for (int j = 0; j < n; ++j) cols.push_back(m.col(j));
      CHECK(lattice_index(cols, n) == abs_of(expected));
    }
  }
}

TEST_CASE("Smith normal form invariants divide") {
  IntMatrix m(3, 3);
  m << 2, 4, 4, -6, 6, 12, 10, -4, -16;
  const auto snf = smith_normal_form(m);
  REQUIRE(snf.rank == 3);
  CHECK(snf.diagonal == big_ints({2, 6, 12}));
  CHECK(determinant(m) == BigInt(snf.sign) * snf.product());
}

TEST_CASE("lattice indices") {
  CHECK(lattice_index(vecs({{2, 0}, {0, 3}}), 2) == 6);
  CHECK(lattice_index(vecs({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3) == 1);
  CHECK_FALSE(lattice_index(vecs({{1, 0, 0}, {0, 1, 0}}), 3).has_value());
  // e1, e3 and v0 = (-7, -1, -1): index |y0| = 1; with y0 = -4 it is 4.
  CHECK(lattice_index(vecs({{1, 0, 0}, {0, 0, 1}, {-7, -1, -1}}), 3) == 1);
  CHECK(lattice_index(vecs({{1, 0, 0}, {0, 0, 1}, {-7, -4, -2}}), 3) == 4);
  CHECK(saturation_index(vecs({{2, 0, 0}, {0, 3, 0}})) == 6);
  CHECK_THROWS_AS(saturation_index(vecs({{1, 2}, {2, 4}})), ArgumentError);
}

TEST_CASE("exact rational arithmetic round trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 1000000);
  for (int i = 0; i < 2000; ++i) {
    const Rational x = make_rational(BigInt(num(rng)), BigInt(den(rng)));
    const Rational y = make_rational(BigInt(num(rng)), BigInt(den(rng)));
    CHECK((x + y) - y == x);
    CHECK(denominator_of(x) > 0);
    CHECK(gcd(numerator_of(x), denominator_of(x)) == 1);
  }
  CHECK(parse_rational("-6/4") == make_rational(BigInt(-3), BigInt(2)));
  CHECK_THROWS_AS(parse_bigint("12x"), ArgumentError);
  CHECK_THROWS_AS(parse_rational("1/0"), ArgumentError);
}

TEST_CASE("solve_exact and unimodular_reducer") {
  RatMatrix a(2, 2);
  a << Rational(2), Rational(1), Rational(1), Rational(3);
  const RatVector b = make_vector<Rational>({Rational(1), Rational(2)});
  const auto x = solve_exact(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  RatMatrix s(2, 2);
  s << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK_FALSE(solve_exact(s, b).has_value());

  const IntVector v = int_vector({12, -18, 8});
  const IntMatrix w = unimodular_reducer(v);
  CHECK(abs_of(determinant(w)) == 1);
  CHECK(w * v == int_vector({2, 0, 0}));
}

TEST_CASE("find_relation on the worked examples") {
  const auto rel = find_relation({BigInt(7), BigInt(15), BigInt(26)});
  REQUIRE(rel);
  CHECK(rel->e == 1);
  CHECK(rel->f == 3);
  CHECK(rel->g == 2);
  CHECK(rel->width == make_rational(BigInt(104), BigInt(105)));
  CHECK_FALSE(find_relation({BigInt(1), BigInt(1), BigInt(1)}).has_value());
  const WeightsTriple gnw{BigInt(25), BigInt(29), BigInt(72)};
  const auto r2 = find_relation(gnw);
  REQUIRE(r2);
  CHECK((r2->e == 4 && r2->f == 4 && r2->g == 3));
  CHECK(r2->width == make_rational(BigInt(648), BigInt(725)));
  CHECK(find_r(*r2, gnw).r == 2);
  CHECK(find_r(*rel, {BigInt(7), BigInt(15), BigInt(26)}).r == 1);
}

TEST_CASE("find_relation with large weights") {
  // (7, 15+2t, 26+3t) with t = 10^12: the relation (1, 3, 2) in any slot order.
  const BigInt t("1000000000000");
  const WeightsTriple w{BigInt(7), 15 + 2 * t, 26 + 3 * t};
  for (const auto& perm : {std::array<int, 3>{0, 1, 2}, std::array<int, 3>{2, 0, 1}, std::array<int, 3>{1, 2, 0}}) {
    const auto input = w.permuted(perm);
    const auto rel = find_relation(input);
    REQUIRE(rel);
    // a and b may trade places with the input order.
    CHECK(((rel->e == 1 && rel->f == 3) || (rel->e == 3 && rel->f == 1)));
    CHECK(rel->g == 2);
    CHECK(input[rel->perm[2]] == w.c);
  }
  // Fifteen-digit weights with no narrow relation.
  CHECK_FALSE(find_relation({BigInt(1004004), BigInt(1006012009), BigInt("1008023027006993")}).has_value());
}

TEST_CASE("linear_congruence") {
  for (long long a = 1; a <= 30; ++a) {
    for (long long b = 1; b <= 30; ++b) {
      for (long long k = -40; k <= 40; ++k) {
        long long least = 0;
        for (long long e = 1; e <= b && !least; ++e) {
          if (((a * e - k) % b + b) % b == 0) least = e;
        }
        const auto got = linear_congruence(BigInt(a), BigInt(b), BigInt(k));
        REQUIRE(got.has_value() == (least != 0));
        if (got) {
          CHECK(got->first == least);
          CHECK(got->second == b / std::gcd(a, b));
        }
      }
    }
  }
}

TEST_CASE("relation_width") {
  const WeightsTriple w{BigInt(7), BigInt(15), BigInt(26)};
  CHECK(relation_width({BigInt(1), BigInt(3), BigInt(2), {0, 1, 2}, Rational(0)}, w) == make_rational(BigInt(104), BigInt(105)));
  const WeightsTriple g5{BigInt(32), BigInt(37), BigInt(115)};
  CHECK(relation_width({BigInt(5), BigInt(5), BigInt(3), {0, 1, 2}, Rational(0)}, g5) ==
        make_rational(BigInt(1035), BigInt(1184)));
  CHECK_THROWS_AS(relation_width({BigInt(1), BigInt(1), BigInt(1), {0, 1, 2}, Rational(0)}, w), ArgumentError);
}

TEST_CASE("find_r with g = 1") {
  // 2*1 + 3*1 = 5*1: width 5/6.
  const WeightsTriple w{BigInt(2), BigInt(3), BigInt(5)};
  const auto rel = find_relation(w);
  REQUIRE(rel);
  CHECK(rel->g == 1);
  CHECK(find_r(*rel, w).r == 1);
}

TEST_CASE("find_relation agrees with the brute-force oracle") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> pick(1, 500);
  int compared = 0, with_relation = 0;
  while (compared < 600) {
    const long long a = pick(rng), b = pick(rng), c = pick(rng);
    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
    ++compared;
    const WeightsTriple w{BigInt(a), BigInt(b), BigInt(c)};
    const auto brute = oracle::relations(a, b, c);
    const auto found = narrow_relations(w);
    REQUIRE(found.size() == brute.size());
    if (brute.empty()) {
      CHECK_FALSE(find_relation(w).has_value());
      continue;
    }
    ++with_relation;
    const auto rel = find_relation(w);
    REQUIRE(rel);
    CHECK(rel->perm[2] == brute.front().c_index);
    CHECK(rel->e == brute.front().e);
    CHECK(rel->f == brute.front().f);
    CHECK(rel->g == brute.front().g);
    CHECK((rel->width < 1) == (w.permuted(rel->perm).c * rel->g * rel->g < w.permuted(rel->perm).a * w.permuted(rel->perm).b));
    // r unique in [1, g] by full scan.
    const auto s = w.permuted(rel->perm);
    int hits = 0;
    for (BigInt r(1); r <= rel->g; ++r) {
      if ((rel->e * r - s.b) % rel->g == 0 && (rel->f * r + s.a) % rel->g == 0) ++hits;
    }
    CHECK(hits == 1);
    CHECK(find_r(*rel, w).r >= 1);
  }
  CHECK(with_relation > 0);
}

TEST_CASE("semigroup membership examples") {
  const WeightsTriple w{BigInt(7), BigInt(15), BigInt(26)};
  CHECK(member(BigInt(22), w) == SemigroupWitness{BigInt(1), BigInt(1), BigInt(0)});
  CHECK(member(BigInt(7), w) == SemigroupWitness{BigInt(1), BigInt(0), BigInt(0)});
  CHECK_FALSE(member(BigInt(11), w).has_value());
  CHECK(member(BigInt(0), w) == SemigroupWitness{BigInt(0), BigInt(0), BigInt(0)});
  CHECK(frobenius_bound({BigInt(2), BigInt(3), BigInt(5)}) == 1);
  CHECK(frobenius_bound({BigInt(3), BigInt(5), BigInt(7)}) == 4);
}

TEST_CASE("frobenius_bound matches the reachability table") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> pick(2, 60);
  int done = 0;
  while (done < 100) {
    const long long a = pick(rng), b = pick(rng), c = pick(rng);
    if (std::gcd(std::gcd(a, b), c) != 1) continue;
    ++done;
    const WeightsTriple w{BigInt(a), BigInt(b), BigInt(c)};
    const BigInt f = frobenius_bound(w);
    const long long top = 2 * std::max<long long>(f.convert_to<long long>(), 1);
    const auto reach = oracle::reachable({a, b, c}, top);
    if (f >= 0) CHECK_FALSE(reach[static_cast<std::size_t>(f.convert_to<long long>())]);
    for (long long d = f.convert_to<long long>() + 1; d <= top; ++d) {
      CHECK(reach[static_cast<std::size_t>(d)]);
      CHECK(member(BigInt(d), w).has_value());
    }
  }
}

TEST_CASE("member witnesses are lexicographically least") {
  const WeightsTriple w{BigInt(4), BigInt(6), BigInt(9)};
  for (long long d = 0; d <= 80; ++d) {
    const auto wit = member(BigInt(d), w);
    std::optional<SemigroupWitness> best;
    for (long long m0 = 0; m0 * 4 <= d && !best; ++m0) {
      for (long long m1 = 0; m0 * 4 + m1 * 6 <= d && !best; ++m1) {
        const long long rest = d - 4 * m0 - 6 * m1;
        if (rest % 9 == 0) best = SemigroupWitness{BigInt(m0), BigInt(m1), BigInt(rest / 9)};
      }
    }
    CHECK(wit == best);
  }
}
