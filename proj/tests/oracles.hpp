#pragma once

// Independent reference computations used only by the tests. They share the
// scalar types with the library but none of its algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "mds/numeric.hpp"

namespace oracle {

using mds::BigInt;
using mds::Rational;

/// Laplace expansion along the first row.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return BigInt(1);
  if (n == 1) return m[0][0];
  BigInt total(0);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(row);
    }
    const BigInt term = m[0][col] * cofactor_det(minor);
    total += col % 2 == 0 ? term : BigInt(-term);
  }
  return total;
}

inline std::vector<std::vector<BigInt>> rows_of(const std::vector<mds::IntVector>& vs) {
  std::vector<std::vector<BigInt>> out;
  for (const auto& v : vs) {
    std::vector<BigInt> row;
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(v(i));
    out.push_back(row);
  }
  return out;
}

struct BruteRelation {
  long long e, f, g;
  int c_index;  // which input weight sits in the c slot
  long long a, b, c;
};

/// All (e, f, g) with e, f, g <= bound, ae + bf = cg, gcd(e,f,g) = 1 and
/// cg^2 < ab, over the three choices of the c slot.
inline std::vector<BruteRelation> relations(long long w0, long long w1, long long w2, long long bound = 200) {
  const long long w[3] = {w0, w1, w2};
  std::vector<BruteRelation> out;
  for (int ci = 2; ci >= 0; --ci) {
    long long ab[2];
    int k = 0;
    for (int i = 0; i < 3; ++i) {
      if (i != ci) ab[k++] = w[i];
    }
    const long long a = ab[0], b = ab[1], c = w[ci];
    for (long long g = 1; g <= bound; ++g) {
      if (c * g * g >= a * b) break;
      for (long long e = 1; e <= bound; ++e) {
        const long long rest = c * g - a * e;
        if (rest <= 0) break;
        if (rest % b != 0) continue;
        const long long f = rest / b;
        if (f > bound) continue;
        if (std::gcd(std::gcd(e, f), g) != 1) continue;
        out.push_back({e, f, g, ci, a, b, c});
      }
    }
  }
  return out;
}

/// reach[x] for 0 <= x <= limit: x is a non-negative combination of the weights.
inline std::vector<char> reachable(const std::vector<long long>& weights, long long limit) {
  std::vector<char> reach(static_cast<std::size_t>(limit + 1), 0);
  reach[0] = 1;
  for (long long x = 1; x <= limit; ++x) {
    for (long long w : weights) {
      if (w <= x && reach[static_cast<std::size_t>(x - w)]) {
        reach[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return reach;
}

/// Half-plane / half-space description from vertex list of a simplex:
/// constraint k excludes vertex k's opposite side. Points are rational.
struct HalfSpace {
  std::vector<Rational> normal;
  Rational rhs;  // normal . p <= rhs
};

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Facets of a triangle (2D) or tetrahedron (3D), oriented to contain the
/// remaining vertex.
inline std::vector<HalfSpace> simplex_halfspaces(const std::vector<std::vector<Rational>>& v) {
  std::vector<HalfSpace> out;
  const std::size_t dim = v.front().size();
  for (std::size_t skip = 0; skip < v.size(); ++skip) {
    std::vector<std::vector<Rational>> face;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != skip) face.push_back(v[i]);
    }
    std::vector<Rational> n(dim);
    if (dim == 2) {
      n = {face[1][1] - face[0][1], face[0][0] - face[1][0]};
    } else {
      std::vector<Rational> p(3), q(3);
      for (int k = 0; k < 3; ++k) {
        p[k] = face[1][k] - face[0][k];
        q[k] = face[2][k] - face[0][k];
      }
      n = {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
    }
    Rational h = dot(n, face[0]);
    if (dot(n, v[skip]) > h) {
      for (auto& x : n) x = -x;
      h = -h;
    }
    out.push_back({n, h});
  }
  return out;
}

inline std::vector<Rational> scaled(const std::vector<Rational>& p, const BigInt& m) {
  std::vector<Rational> out;
  for (const auto& x : p) out.push_back(x * Rational(m));
  return out;
}

/// Lattice points of conv{(0,0), m P_L, m P_R} on the line x = i, by testing
/// every y in the bounding range against the three edges.
inline BigInt triangle_slice(const std::vector<Rational>& pl, const std::vector<Rational>& pr, const BigInt& m,
                             const BigInt& i) {
  const std::vector<std::vector<Rational>> verts{{Rational(0), Rational(0)}, scaled(pl, m), scaled(pr, m)};
  const auto hs = simplex_halfspaces(verts);
  Rational lo = verts[0][1], hi = verts[0][1];
  for (const auto& v : verts) {
    lo = std::min(lo, v[1]);
    hi = std::max(hi, v[1]);
  }
  BigInt count(0);
  for (BigInt y = mds::floor_of(lo); y <= mds::ceil_of(hi); ++y) {
    const std::vector<Rational> p{Rational(i), Rational(y)};
    bool inside = true;
    for (const auto& h : hs) {
      if (dot(h.normal, p) > h.rhs) {
        inside = false;
        break;
      }
    }
    count += inside;
  }
  return count;
}

struct Slice3 {
  BigInt points;
  BigInt distinct_y;
  BigInt distinct_z;
};

/// Lattice points of m conv{(0,0,1), (0,1,0), P_L, P_R} in the plane x = i:
/// for each y, the integer z-interval cut out by the four facets.
inline Slice3 tetra_slice(const std::vector<Rational>& pl, const std::vector<Rational>& pr, const BigInt& m,
                          const BigInt& i) {
  const Rational zero(0), one(1);
  const std::vector<std::vector<Rational>> verts{scaled({zero, zero, one}, m), scaled({zero, one, zero}, m),
                                                 scaled(pl, m), scaled(pr, m)};
  const auto hs = simplex_halfspaces(verts);
  Rational lo = verts[0][1], hi = verts[0][1];
  for (const auto& v : verts) {
    lo = std::min(lo, v[1]);
    hi = std::max(hi, v[1]);
  }
  Slice3 out{BigInt(0), BigInt(0), BigInt(0)};
  std::set<BigInt> zs;
  for (BigInt y = mds::floor_of(lo); y <= mds::ceil_of(hi); ++y) {
    bool any_bound_lo = false, any_bound_hi = false, empty = false;
    Rational zlo, zhi;
    for (const auto& h : hs) {
      const Rational rest = h.rhs - h.normal[0] * Rational(i) - h.normal[1] * Rational(y);
      const Rational& nz = h.normal[2];
      if (nz == 0) {
        if (rest < 0) empty = true;
      } else if (nz > 0) {
        const Rational b = rest / nz;
        if (!any_bound_hi || b < zhi) zhi = b;
        any_bound_hi = true;
      } else {
        const Rational b = rest / nz;
        if (!any_bound_lo || b > zlo) zlo = b;
        any_bound_lo = true;
      }
    }
    if (empty || !any_bound_lo || !any_bound_hi) continue;
    const BigInt z0 = mds::ceil_of(zlo), z1 = mds::floor_of(zhi);
    if (z1 < z0) continue;
    out.points += z1 - z0 + 1;
    out.distinct_y += 1;
    for (BigInt z = z0; z <= z1; ++z) zs.insert(z);
  }
  out.distinct_z = BigInt(zs.size());
  return out;
}

/// Lattice points of { z : <v_k, z> <= s_k } by scanning a box.
inline std::vector<std::vector<long long>> box_points(const std::vector<mds::IntVector>& normals,
                                                      const std::vector<BigInt>& supports,
                                                      const std::vector<long long>& lo,
                                                      const std::vector<long long>& hi) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> z(lo);
  const std::size_t n = lo.size();
  std::vector<std::vector<long long>> nv;
  std::vector<long long> sv;
  for (std::size_t k = 0; k < normals.size(); ++k) {
    std::vector<long long> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(normals[k](static_cast<Eigen::Index>(j)).convert_to<long long>());
    nv.push_back(row);
    sv.push_back(supports[k].convert_to<long long>());
  }
  for (;;) {
    bool inside = true;
    for (std::size_t k = 0; k < nv.size() && inside; ++k) {
      long long s = 0;
      for (std::size_t j = 0; j < n; ++j) s += nv[k][j] * z[j];
      inside = s <= sv[k];
    }
    if (inside) out.push_back(z);
    std::size_t j = 0;
    while (j < n && ++z[j] > hi[j]) {
      z[j] = lo[j];
      ++j;
    }
    if (j == n) break;
  }
  return out;
}

}  // namespace oracle
