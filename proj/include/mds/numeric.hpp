#pragma once

// Exact scalar types and the dense Eigen aliases built on them.
//
// Every quantity in the library is an arbitrary-precision integer or rational;
// there is no floating point anywhere. Expression templates are switched off
// on the multiprecision side so that Eigen's own expression machinery is the
// only one in play.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mds {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Integer lattice vector (ray generators, normals).
using IntVector = Vector<BigInt>;
using IntMatrix = Matrix<BigInt>;
/// Point with rational coordinates (polytope vertices).
using RatVector = Vector<Rational>;
using RatMatrix = Matrix<Rational>;

inline BigInt numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const BigInt& num, const BigInt& den = BigInt(1)) {
  return Rational(num, den);
}

inline BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// Floor of num/den for den != 0.
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;  // truncates toward zero
  if (q * den != num && ((num < 0) != (den < 0))) q -= 1;
  return q;
}

inline BigInt ceil_div(const BigInt& num, const BigInt& den) {
  return -floor_div(-num, den);
}

inline BigInt floor_of(const Rational& q) { return floor_div(numerator_of(q), denominator_of(q)); }
inline BigInt ceil_of(const Rational& q) { return ceil_div(numerator_of(q), denominator_of(q)); }
inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return BigInt(0);
  return abs_of(a / gcd(a, b) * b);
}

/// Non-negative remainder of a modulo m > 0.
inline BigInt mod_floor(const BigInt& a, const BigInt& m) { return a - m * floor_div(a, m); }

/// Parses a decimal integer with optional sign; throws ArgumentError on junk.
BigInt parse_bigint(std::string_view text);

/// Parses "p/q" or "p" into a rational.
Rational parse_rational(std::string_view text);

inline std::string to_string(const BigInt& x) { return x.str(); }
inline std::string to_string(const Rational& q) { return q.str(); }

template <typename Scalar>
Vector<Scalar> make_vector(std::initializer_list<Scalar> values) {
  Vector<Scalar> v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

inline IntVector int_vector(std::initializer_list<long long> values) {
  IntVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (long long x : values) v(i++) = BigInt(x);
  return v;
}

inline std::vector<BigInt> big_ints(std::initializer_list<long long> values) {
  std::vector<BigInt> out;
  out.reserve(values.size());
  for (long long x : values) out.emplace_back(x);
  return out;
}

std::string format_vector(const IntVector& v);
std::string format_vector(const RatVector& v);

}  // namespace mds
