#pragma once

// Integer lattice substrate: gcds, primitivity, exact determinants, Smith
// normal form and sublattice indices. Matrix routines are templated on the
// Eigen expression so they accept blocks and maps as well as plain matrices.

#include <algorithm>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "mds/errors.hpp"
#include "mds/numeric.hpp"

namespace mds {

/// Non-negative gcd of all entries; 0 only when every entry is 0.
BigInt gcd_all(std::span<const BigInt> xs);

template <typename Derived>
BigInt gcd_all(const Eigen::MatrixBase<Derived>& v) {
  if (v.size() == 0) throw ArgumentError("gcd_all: empty input");
  BigInt g(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, BigInt(v(i)));
  return g;
}

bool is_primitive(const IntVector& v);

/// v divided by the gcd of its entries. Throws on the zero vector.
IntVector primitive_part(const IntVector& v);

/// Smallest positive integer multiple of a rational vector that is integral
/// and primitive, keeping direction.
IntVector primitive_along(const RatVector& v);

/// Stacks vectors of equal length as the rows of a matrix.
template <typename Scalar>
Matrix<Scalar> rows_matrix(std::span<const Vector<Scalar>> rows) {
  if (rows.empty()) return Matrix<Scalar>(0, 0);
  const Eigen::Index cols = rows.front().size();
  Matrix<Scalar> m(static_cast<Eigen::Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ArgumentError("rows_matrix: ragged input");
    m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  }
  return m;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw ArgumentError("determinant: matrix is not square");
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> a = input;
  Scalar sign(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Row-order determinant of k vectors of length k.
BigInt det(std::span<const IntVector> rows);

template <typename Scalar>
struct SmithForm {
  /// Nonzero invariant factors d1 | d2 | ..., all positive.
  std::vector<Scalar> diagonal;
  Eigen::Index rank = 0;
  /// Product of the unimodular sign changes; for a square nonsingular input
  /// det = sign * prod(diagonal).
  int sign = 1;

  Scalar product() const {
    Scalar p(1);
    for (const auto& d : diagonal) p *= d;
    return p;
  }
};

/// Smith normal form by row and column reduction, pivoting on the entry of
/// least nonzero absolute value.
template <typename Derived>
SmithForm<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  SmithForm<Scalar> out;
  auto absval = [](const Scalar& x) { return x < 0 ? Scalar(-x) : x; };

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    // Bring the smallest nonzero entry of the trailing block to (t, t).
    auto move_min_to_pivot = [&](bool whole_block) -> bool {
      Eigen::Index bi = -1, bj = -1;
      Scalar best(0);
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (a(i, j) == 0) continue;
          if (bi < 0 || absval(a(i, j)) < best) {
            best = absval(a(i, j));
            bi = i;
            bj = j;
          }
        }
      }
      if (bi < 0) return false;
      if (bi != t) {
        a.row(t).swap(a.row(bi));
        out.sign = -out.sign;
      }
      if (bj != t) {
        a.col(t).swap(a.col(bj));
        out.sign = -out.sign;
      }
      return true;
    };

    if (!move_min_to_pivot(true)) break;
    for (;;) {
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_min_to_pivot(false);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and go again.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < rows && divides; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.row(t) += a.row(i);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.row(t) *= Scalar(-1);
      out.sign = -out.sign;
    }
    out.diagonal.push_back(a(t, t));
    out.rank = t + 1;
  }
  return out;
}

/// Determinant read off the Smith form (sign tracked through the reduction).
template <typename Derived>
typename Derived::Scalar determinant_via_smith(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw ArgumentError("determinant_via_smith: matrix is not square");
  const auto snf = smith_normal_form(m);
  if (snf.rank < m.rows()) return Scalar(0);
  return Scalar(snf.sign) * snf.product();
}

/// Index of the sublattice spanned by `generators` in Z^rank; nullopt when
/// the span is not of full rank (infinite index).
std::optional<BigInt> lattice_index(std::span<const IntVector> generators, Eigen::Index rank);

/// Index of the span of `generators` inside its saturation (generators.size()
/// need not equal the ambient rank). Throws on linearly dependent input.
BigInt saturation_index(std::span<const IntVector> generators);

/// Solves A x = b exactly over the rationals for square nonsingular A;
/// nullopt when A is singular.
std::optional<RatVector> solve_exact(const RatMatrix& a, const RatVector& b);

/// Unimodular W with W v = (gcd(v), 0, ..., 0).
IntMatrix unimodular_reducer(const IntVector& v);

/// Extended gcd: returns (g, x, y) with a x + b y = g >= 0.
std::tuple<BigInt, BigInt, BigInt> extended_gcd(const BigInt& a, const BigInt& b);

/// Inverse of a modulo m (m > 0, gcd(a, m) = 1), in [0, m).
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// Least e >= 1 with a e = k (mod b), and the step between solutions; nullopt
/// when gcd(a, b) does not divide k. a, b > 0.
std::optional<std::pair<BigInt, BigInt>> linear_congruence(const BigInt& a, const BigInt& b, const BigInt& k);

}  // namespace mds
