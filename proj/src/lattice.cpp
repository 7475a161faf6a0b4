#include "mds/lattice.hpp"

#include <cctype>
#include <sstream>

namespace mds {

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::size_t j = text.size();
  while (j > i && std::isspace(static_cast<unsigned char>(text[j - 1]))) --j;
  const std::string_view body = text.substr(i, j - i);
  std::size_t k = 0;
  if (k < body.size() && (body[k] == '-' || body[k] == '+')) ++k;
  if (k == body.size()) throw ArgumentError("not an integer: '" + std::string(text) + "'");
  for (std::size_t p = k; p < body.size(); ++p) {
    if (!std::isdigit(static_cast<unsigned char>(body[p]))) {
      throw ArgumentError("not an integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(body[0] == '+' ? body.substr(1) : body);
  return BigInt(digits);
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw ArgumentError("zero denominator: '" + std::string(text) + "'");
  return make_rational(parse_bigint(text.substr(0, slash)), den);
}

namespace {
template <typename V>
std::string format_any(const V& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v(i).str();
  }
  os << ')';
  return os.str();
}
}  // namespace

std::string format_vector(const IntVector& v) { return format_any(v); }
std::string format_vector(const RatVector& v) { return format_any(v); }

BigInt gcd_all(std::span<const BigInt> xs) {
  if (xs.empty()) throw ArgumentError("gcd_all: empty input");
  BigInt g(0);
  for (const auto& x : xs) g = gcd(g, x);
  return g;
}

bool is_primitive(const IntVector& v) {
  if (v.size() == 0) return false;
  return gcd_all(v) == 1;
}

IntVector primitive_part(const IntVector& v) {
  const BigInt g = gcd_all(v);
  if (g == 0) throw ArgumentError("primitive_part: zero vector");
  IntVector out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g;
  return out;
}

IntVector primitive_along(const RatVector& v) {
  BigInt den(1);
  for (Eigen::Index i = 0; i < v.size(); ++i) den = lcm(den, denominator_of(v(i)));
  IntVector scaled(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    scaled(i) = numerator_of(v(i) * Rational(den));
  }
  return primitive_part(scaled);
}

BigInt det(std::span<const IntVector> rows) {
  for (const auto& r : rows) {
    if (r.size() != static_cast<Eigen::Index>(rows.size())) {
      throw ArgumentError("det: expected " + std::to_string(rows.size()) + " vectors of rank " +
                          std::to_string(rows.size()));
    }
  }
  return determinant(rows_matrix<BigInt>(rows));
}

std::optional<BigInt> lattice_index(std::span<const IntVector> generators, Eigen::Index rank) {
  if (rank <= 0) throw ArgumentError("lattice_index: rank must be positive");
  if (generators.empty()) return std::nullopt;
  IntMatrix m(rank, static_cast<Eigen::Index>(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].size() != rank) throw ArgumentError("lattice_index: rank mismatch");
    m.col(static_cast<Eigen::Index>(j)) = generators[j];
  }
  const auto snf = smith_normal_form(m);
  if (snf.rank < rank) return std::nullopt;
  return snf.product();
}

BigInt saturation_index(std::span<const IntVector> generators) {
  const IntMatrix m = rows_matrix<BigInt>(generators);
  const auto snf = smith_normal_form(m);
  if (snf.rank < static_cast<Eigen::Index>(generators.size())) {
    throw ArgumentError("saturation_index: generators are linearly dependent");
  }
  return snf.product();
}

std::optional<RatVector> solve_exact(const RatMatrix& a_in, const RatVector& b_in) {
  if (a_in.rows() != a_in.cols() || a_in.rows() != b_in.size()) {
    throw ArgumentError("solve_exact: shape mismatch");
  }
  const Eigen::Index n = a_in.rows();
  RatMatrix a = a_in;
  RatVector b = b_in;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      a.row(k).swap(a.row(p));
      std::swap(b(k), b(p));
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational factor = a(i, k) / a(k, k);
      a.row(i) -= factor * a.row(k);
      b(i) -= factor * b(k);
    }
  }
  RatVector x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    Rational acc = b(i);
    for (Eigen::Index j = i + 1; j < n; ++j) acc -= a(i, j) * x(j);
    x(i) = acc / a(i, i);
  }
  return x;
}

IntMatrix unimodular_reducer(const IntVector& v_in) {
  const Eigen::Index n = v_in.size();
  if (n == 0) throw ArgumentError("unimodular_reducer: empty vector");
  IntVector v = v_in;
  IntMatrix w = IntMatrix::Identity(n, n);
  for (;;) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (v(i) != 0 && (piv < 0 || abs_of(v(i)) < abs_of(v(piv)))) piv = i;
    }
    if (piv < 0) break;
    if (piv != 0) {
      std::swap(v(0), v(piv));
      w.row(0).swap(w.row(piv));
    }
    bool done = true;
    for (Eigen::Index i = 1; i < n; ++i) {
      if (v(i) == 0) continue;
      const BigInt q = v(i) / v(0);
      v(i) -= q * v(0);
      w.row(i) -= q * w.row(0);
      if (v(i) != 0) done = false;
    }
    if (done) break;
  }
  if (v(0) < 0) {
    v(0) = -v(0);
    w.row(0) *= BigInt(-1);
  }
  return w;
}

std::tuple<BigInt, BigInt, BigInt> extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b, old_s(1), s(0), old_t(0), t(1);
  while (r != 0) {
    const BigInt q = floor_div(old_r, r);
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
  if (m <= 0) throw ArgumentError("mod_inverse: modulus must be positive");
  if (m == 1) return BigInt(0);
  auto [g, x, y] = extended_gcd(mod_floor(a, m), m);
  (void)y;
  if (g != 1) throw ArgumentError("mod_inverse: " + a.str() + " not invertible mod " + m.str());
  return mod_floor(x, m);
}

std::optional<std::pair<BigInt, BigInt>> linear_congruence(const BigInt& a, const BigInt& b, const BigInt& k) {
  const BigInt h = gcd(a, b);
  if (k % h != 0) return std::nullopt;
  const BigInt step = b / h;
  BigInt e = mod_floor((k / h) * mod_inverse(a / h, step), step);
  if (e == 0) e = step;
  return std::pair{e, step};
}

}  // namespace mds
