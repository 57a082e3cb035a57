#pragma once

#include "qra/action.hpp"
#include "qra/linalg.hpp"
#include "qra/rng.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace qra {

inline constexpr double kClusterTol = 1e-7;
inline constexpr double kRankTol = 1e-7;
inline constexpr double kIntegralityTol = 1e-6;
inline constexpr int kMaxCommutantRank = 128;

/// One isotypic block of the permutation module over the reals. A block
/// either carries a single self-conjugate irreducible type (degree d,
/// multiplicity m, block dimension m*d) or a conjugate pair of complex
/// types, reported as two (d, m) entries sharing one real subspace of
/// dimension 2*m*d.
struct IsotypicComponent {
  int degree = 0;
  int multiplicity = 0;
  bool conjugate_pair = false;
  bool trivial = false;
  Matrix basis; // omega x block_dimension, orthonormal columns

  int block_dimension() const { return static_cast<int>(basis.cols()); }
  int entry_count() const { return conjugate_pair ? 2 : 1; }
};

struct IsotypicDecomposition {
  std::vector<IsotypicComponent> components;
  int rank = 0;    // number of orbitals
  double tol = kClusterTol;
  int retries = 0; // reseeds needed before a clean eigenvalue split

  /// (degree, multiplicity) pairs with conjugate pairs expanded, sorted.
  std::vector<std::pair<int, int>> degree_multiplicity_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& c : components)
      for (int k = 0; k < c.entry_count(); ++k) out.emplace_back(c.degree, c.multiplicity);
    std::sort(out.begin(), out.end());
    return out;
  }

  int d_min() const {
    int best = -1;
    for (const auto& c : components)
      if (!c.trivial && (best < 0 || c.degree < best)) best = c.degree;
    if (best < 0) throw std::runtime_error("d_min: no non-trivial component (|Omega| = 1)");
    return best;
  }

  int m_min() const {
    int best = -1;
    for (const auto& c : components)
      if (!c.trivial && (best < 0 || c.multiplicity < best)) best = c.multiplicity;
    if (best < 0) throw std::runtime_error("m_min: no non-trivial component (|Omega| = 1)");
    return best;
  }
};

namespace detail {

/// Structure constants of the orbital (coherent-configuration) algebra:
/// M_a M_b = sum_c coeff[c] M_c, computed from one representative row.
inline std::vector<std::vector<std::vector<double>>> orbital_structure_constants(
    const Orbitals& orb) {
  int n = orb.omega;
  int R = orb.count;
  // neighbor lists of the base row per orbital: y with (x0, y) in O;
  // transitivity makes x0 = 0 a valid representative row
  std::vector<std::vector<int>> row_of(R);
  for (int y = 0; y < n; ++y) row_of[orb.at(0, y)].push_back(y);
  std::vector<std::vector<std::vector<double>>> c(
      R, std::vector<std::vector<double>>(R, std::vector<double>(R, 0.0)));
  // bucket[b][y] accumulates row 0 of M_a M_b for every b in one sweep
  std::vector<double> bucket;
  for (int a = 0; a < R; ++a) {
    bucket.assign(static_cast<size_t>(R) * n, 0.0);
    for (int z : row_of[a]) {
      const int* row = orb.id.data() + static_cast<size_t>(z) * n;
      for (int y = 0; y < n; ++y) bucket[static_cast<size_t>(row[y]) * n + y] += 1.0;
    }
    // entry (0, y) of M_a M_b depends only on the orbital of (0, y)
    for (int b = 0; b < R; ++b)
      for (int y = 0; y < n; ++y) c[a][b][orb.at(0, y)] = bucket[static_cast<size_t>(b) * n + y];
  }
  return c;
}

} // namespace detail

/// Dense orbital indicator matrix M_O.
inline Matrix orbital_matrix(const Orbitals& orb, int o) {
  Matrix m = Matrix::Zero(orb.omega, orb.omega);
  for (int x = 0; x < orb.omega; ++x)
    for (int y = 0; y < orb.omega; ++y)
      if (orb.at(x, y) == o) m(x, y) = 1.0;
  return m;
}

/// The orbital matrices, which span the commutant of the permutation
/// matrices; integer verification of the commuting property is exact.
inline std::vector<Matrix> commutant_basis(const TransitiveAction& action, const Orbitals& orb) {
  std::vector<Matrix> basis;
  for (int o = 0; o < orb.count; ++o) basis.push_back(orbital_matrix(orb, o));
  // exact commuting check against every generator: M(x,y) == M(gx, gy)
  for (const auto& img : action.gen_images)
    for (int x = 0; x < orb.omega; ++x)
      for (int y = 0; y < orb.omega; ++y)
        if (orb.at(x, y) != orb.at(img[x], img[y]))
          throw std::logic_error("commutant_basis: orbital matrix fails to commute");
  return basis;
}

/// Isotypic decomposition through the center of the commutant algebra:
/// solve [Z, M_O] = 0 inside the commutant span, eigensplit a random
/// symmetric center element, then read (d, m) off each eigenspace from the
/// restricted commutant rank.
inline IsotypicDecomposition isotypic_decomposition(const TransitiveAction& action,
                                                    double tol = kClusterTol,
                                                    std::uint64_t seed = kDefaultSeed) {
  int n = action.omega;
  if (n > kMaxOmega) throw std::runtime_error("isotypic_decomposition: omega cap exceeded");
  Orbitals orb = orbit_pairs(action);
  int R = orb.count;
  if (R > kMaxCommutantRank)
    throw std::runtime_error("isotypic_decomposition: commutant rank above supported cap " +
                             std::to_string(kMaxCommutantRank));

  auto c = detail::orbital_structure_constants(orb);

  // center equations: for all (b, e): sum_a z_a (c[a][b][e] - c[b][a][e]) = 0
  Matrix eqs(R * R, R);
  for (int b = 0; b < R; ++b)
    for (int e = 0; e < R; ++e)
      for (int a = 0; a < R; ++a) eqs(b * R + e, a) = c[a][b][e] - c[b][a][e];
  // structure constants are exact integers; null directions of the integer
  // system surface at solver noise (~1e-13 relative) with the first true
  // nonzero eigenvalue orders of magnitude above
  Matrix center = nullspace(eqs, 1e-7);
  int center_dim = static_cast<int>(center.cols());
  if (center_dim < 1) throw std::logic_error("isotypic_decomposition: empty center");

  // symmetrize center coefficient vectors through the transpose orbital map
  Matrix sym_center(R, center_dim);
  for (int k = 0; k < center_dim; ++k)
    for (int a = 0; a < R; ++a)
      sym_center(a, k) = 0.5 * (center(a, k) + center(orb.transpose[a], k));

  IsotypicDecomposition result;
  result.rank = R;
  result.tol = tol;

  for (int attempt = 0;; ++attempt) {
    if (attempt >= 5)
      throw std::runtime_error("isotypic_decomposition: degenerate eigenvalue split after 5 seeds");
    Rng rng(Rng::mix(seed, 0xCE17E5 + attempt));
    Vector coeff(center_dim);
    for (int k = 0; k < center_dim; ++k) coeff[k] = 2.0 * rng.real() - 1.0;
    Vector z = sym_center * coeff;
    // normalize so eigenvalue gaps are judged on a unit scale
    double zmax = z.cwiseAbs().maxCoeff();
    if (zmax > 0) z /= zmax;
    Matrix zm(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) zm(x, y) = z[orb.at(x, y)];
    SymEig eig = sym_eig(zm);

    Vector descending = eig.values.reverse();
    auto clusters = cluster_descending(descending, tol);

    // expected block count: symmetric part of the center
    int expected_blocks = rank_of_rows(sym_center.transpose(), 1e-9);
    if (static_cast<int>(clusters.size()) != expected_blocks) {
      result.retries = attempt + 1;
      continue;
    }

    std::vector<IsotypicComponent> comps;
    bool ok = true;
    long long dim_total = 0, rank_total = 0;
    for (auto [start, end] : clusters) {
      IsotypicComponent comp;
      int dim = end - start;
      comp.basis.resize(n, dim);
      for (int k = 0; k < dim; ++k) comp.basis.col(k) = eig.vectors.col(n - 1 - (start + k));
      // restricted commutant rank: stack vec(V^T M_O V) over all orbitals
      std::vector<Matrix> mv(R, Matrix::Zero(n, dim));
      for (int x = 0; x < n; ++x) {
        const int* row = orb.id.data() + static_cast<size_t>(x) * n;
        for (int y = 0; y < n; ++y) mv[row[y]].row(x) += comp.basis.row(y);
      }
      Matrix stacked(R, dim * dim);
      for (int o = 0; o < R; ++o) {
        Matrix t = comp.basis.transpose() * mv[o];
        stacked.row(o) = Eigen::Map<Vector>(t.data(), dim * dim).transpose();
      }
      int r = rank_of_rows(stacked, kRankTol);
      int m_sq = static_cast<int>(std::llround(std::sqrt(static_cast<double>(r))));
      if (m_sq * m_sq == r && dim % m_sq == 0) {
        comp.multiplicity = m_sq;
        comp.degree = dim / m_sq;
        comp.conjugate_pair = false;
      } else {
        int half = r / 2;
        int m_pair = static_cast<int>(std::llround(std::sqrt(static_cast<double>(half))));
        if (r % 2 != 0 || m_pair * m_pair != half || dim % (2 * m_pair) != 0) {
          ok = false;
          break;
        }
        comp.multiplicity = m_pair;
        comp.degree = dim / (2 * m_pair);
        comp.conjugate_pair = true;
      }
      // trivial component: contains the all-ones direction
      Vector ones = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
      double overlap = (comp.basis.transpose() * ones).norm();
      comp.trivial = overlap > 0.5;
      dim_total += dim;
      rank_total += comp.conjugate_pair ? 2LL * comp.multiplicity * comp.multiplicity
                                        : 1LL * comp.multiplicity * comp.multiplicity;
      comps.push_back(std::move(comp));
    }
    if (!ok) {
      result.retries = attempt + 1;
      continue;
    }
    if (dim_total != n) throw std::logic_error("isotypic_decomposition: dimensions do not sum");
    if (rank_total != R)
      throw std::logic_error("isotypic_decomposition: multiplicities do not match rank");
    int trivial_count = 0;
    for (const auto& comp : comps)
      if (comp.trivial) {
        ++trivial_count;
        if (comp.degree != 1 || comp.multiplicity != 1 || comp.conjugate_pair)
          throw std::logic_error("isotypic_decomposition: trivial component malformed");
      }
    if (trivial_count != 1)
      throw std::logic_error("isotypic_decomposition: trivial component not unique");
    result.components = std::move(comps);
    return result;
  }
}

/// Minimum degree / multiplicity of a non-trivial component.
inline int d_min(const IsotypicDecomposition& dec) { return dec.d_min(); }
inline int m_min(const IsotypicDecomposition& dec) { return dec.m_min(); }

/// Analysis bundle cached per action by the suites.
struct ActionAnalysis {
  Orbitals orbitals;
  IsotypicDecomposition decomposition;
  int d_h = 0;
  int m_h = 0;
};

inline ActionAnalysis analyze_action(const TransitiveAction& action,
                                     std::uint64_t seed = kDefaultSeed) {
  ActionAnalysis a;
  a.orbitals = orbit_pairs(action);
  a.decomposition = isotypic_decomposition(action, kClusterTol, seed);
  a.d_h = a.decomposition.d_min();
  a.m_h = a.decomposition.m_min();
  return a;
}

} // namespace qra
