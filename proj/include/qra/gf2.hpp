#pragma once

#include "qra/permutation.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qra {

/// Invertible n-by-n matrix over GF(2) with rows packed into bit words.
/// Row r, column c is bit c of rows[r]. Over GF(2) every invertible matrix
/// has determinant 1, so invertibility is the whole invariant.
struct GF2Matrix {
  int n = 0;
  std::vector<std::uint32_t> rows;

  static GF2Matrix identity(int n) {
    GF2Matrix m;
    m.n = n;
    m.rows.resize(n);
    for (int i = 0; i < n; ++i) m.rows[i] = 1u << i;
    return m;
  }

  bool get(int r, int c) const { return (rows[r] >> c) & 1u; }

  /// Matrix-vector product; vectors are bit masks.
  std::uint32_t apply(std::uint32_t v) const {
    std::uint32_t out = 0;
    for (int r = 0; r < n; ++r)
      if (__builtin_parity(rows[r] & v)) out |= 1u << r;
    return out;
  }

  GF2Matrix multiply(const GF2Matrix& other) const {
    if (n != other.n) throw std::invalid_argument("gf2 multiply: dimension mismatch");
    GF2Matrix out;
    out.n = n;
    out.rows.resize(n);
    // column c of ab is a applied to column c of b
    for (int c = 0; c < n; ++c) {
      std::uint32_t col = 0;
      for (int r = 0; r < n; ++r)
        if (other.get(r, c)) col |= 1u << r;
      std::uint32_t image = apply(col);
      for (int r = 0; r < n; ++r)
        if ((image >> r) & 1u) out.rows[r] |= 1u << c;
    }
    return out;
  }

  bool invertible() const {
    std::vector<std::uint32_t> work = rows;
    int rank = 0;
    for (int c = 0; c < n; ++c) {
      int pivot = -1;
      for (int r = rank; r < n; ++r)
        if ((work[r] >> c) & 1u) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(work[rank], work[pivot]);
      for (int r = 0; r < n; ++r)
        if (r != rank && ((work[r] >> c) & 1u)) work[r] ^= work[rank];
      ++rank;
    }
    return rank == n;
  }
};

/// Elementary transvection I + E_{ij} (adds row j into row i on application).
inline GF2Matrix gf2_transvection(int n, int i, int j) {
  GF2Matrix m = GF2Matrix::identity(n);
  m.rows[i] |= 1u << j;
  return m;
}

/// Cyclic companion permutation matrix e_1 -> e_2 -> ... -> e_n -> e_1.
inline GF2Matrix gf2_cycle(int n) {
  GF2Matrix m;
  m.n = n;
  m.rows.resize(n);
  for (int r = 0; r < n; ++r) m.rows[(r + 1) % n] = 1u << r;
  return m;
}

/// Standard generating pair of SL_n(2) = GL_n(2).
inline std::vector<GF2Matrix> sln2_generators(int n) {
  if (n < 2 || n > 10) throw std::invalid_argument("sln2_generators: n in 2..10");
  return {gf2_transvection(n, 0, 1), gf2_cycle(n)};
}

/// Permutation of the 2^n - 1 nonzero vectors; vector with bitmask v gets
/// index v - 1.
inline Perm gf2_vector_permutation(const GF2Matrix& m) {
  int count = (1 << m.n) - 1;
  Perm p(count);
  for (std::uint32_t v = 1; v <= static_cast<std::uint32_t>(count); ++v)
    p[v - 1] = static_cast<int>(m.apply(v)) - 1;
  return p;
}

/// Reads the matrix back from its action on basis vectors.
inline GF2Matrix gf2_from_vector_permutation(const Perm& p, int n) {
  if (static_cast<int>(p.size()) != (1 << n) - 1)
    throw std::invalid_argument("gf2_from_vector_permutation: degree mismatch");
  GF2Matrix m;
  m.n = n;
  m.rows.resize(n);
  for (int j = 0; j < n; ++j) {
    std::uint32_t image = static_cast<std::uint32_t>(p[(1u << j) - 1] + 1);
    for (int r = 0; r < n; ++r)
      if ((image >> r) & 1u) m.rows[r] |= 1u << j;
  }
  return m;
}

/// Characteristic polynomial over GF(2) as a bitmask (bit k = coefficient of
/// x^k), computed by cofactor expansion of det(M + xI); n <= 6.
inline std::uint32_t gf2_char_poly(const GF2Matrix& m) {
  int n = m.n;
  if (n > 6) throw std::invalid_argument("gf2_char_poly: n too large");
  // entries are polynomials of degree <= 1: bit 0 constant, bit 1 coeff of x
  std::vector<std::uint32_t> a(n * n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      std::uint32_t e = m.get(r, c) ? 1u : 0u;
      if (r == c) e ^= 2u;
      a[r * n + c] = e;
    }
  auto poly_mul = [](std::uint32_t p, std::uint32_t q) {
    std::uint32_t out = 0;
    for (int k = 0; q >> k; ++k)
      if ((q >> k) & 1u) out ^= p << k;
    return out;
  };
  // recursive Laplace expansion along the first remaining row
  std::vector<int> cols(n);
  for (int i = 0; i < n; ++i) cols[i] = i;
  auto det = [&](auto&& self, int row, std::vector<int>& cs) -> std::uint32_t {
    if (cs.empty()) return 1u;
    std::uint32_t acc = 0;
    for (size_t k = 0; k < cs.size(); ++k) {
      std::uint32_t e = a[row * n + cs[k]];
      if (!e) continue;
      std::vector<int> rest;
      for (size_t j = 0; j < cs.size(); ++j)
        if (j != k) rest.push_back(cs[j]);
      acc ^= poly_mul(e, self(self, row + 1, rest));
    }
    return acc;
  };
  return det(det, 0, cols);
}

inline int gf2_poly_degree(std::uint32_t p) {
  int d = -1;
  for (int k = 0; p >> k; ++k)
    if ((p >> k) & 1u) d = k;
  return d;
}

/// Irreducibility over GF(2) for degree <= 4 polynomials.
inline bool gf2_poly_irreducible(std::uint32_t p) {
  int d = gf2_poly_degree(p);
  if (d <= 0) return false;
  if (d == 1) return true;
  bool value_at_0 = p & 1u;
  bool value_at_1 = __builtin_parity(p);      // sum of coefficients mod 2
  if (!value_at_0 || !value_at_1) return false;
  if (d <= 3) return true;                    // no linear factor suffices
  if (d == 4) return p != 0b10101u;           // only reducible rootless quartic: (x^2+x+1)^2
  throw std::invalid_argument("gf2_poly_irreducible: degree > 4 unsupported");
}

} // namespace qra
