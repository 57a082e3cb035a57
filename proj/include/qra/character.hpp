#pragma once

#include "qra/group.hpp"
#include "qra/linalg.hpp"
#include "qra/rng.hpp"

#include <Eigen/Eigenvalues>

#include <complex>
#include <stdexcept>
#include <vector>

namespace qra {

inline constexpr int kMaxCharacterTableGroup = 25'000;
inline constexpr int kMaxCharacterTableClasses = 40;

/// Complex character table of an explicit group, classes in ascending order
/// of their smallest element id, characters sorted by degree (ties broken by
/// value lexicographic order).
struct CharacterTable {
  std::vector<ConjugacyClassData> classes;
  std::vector<int> class_of;                              // element id -> class index
  std::vector<std::vector<std::complex<double>>> chars;   // chars[i][j] = chi_i(class j)
  std::vector<int> degrees;

  int class_count() const { return static_cast<int>(classes.size()); }
};

/// Class-sum diagonalization: the class multiplication coefficients give a
/// commuting family of k x k matrices; the common eigenvectors are the
/// central characters, recovered from a random seeded combination.
inline CharacterTable dixon_character_table(GroupPtr group, std::uint64_t seed = kDefaultSeed) {
  const ExplicitGroup& g = *group;
  if (g.order() > kMaxCharacterTableGroup)
    throw std::runtime_error("dixon_character_table: group order cap exceeded");
  CharacterTable table;
  table.classes = conjugacy_classes(g);
  int k = table.class_count();
  if (k > kMaxCharacterTableClasses)
    throw std::runtime_error("dixon_character_table: class count cap exceeded");
  table.class_of.assign(g.order(), -1);
  for (int j = 0; j < k; ++j)
    for (int m : table.classes[j].members) table.class_of[m] = j;

  int identity_class = table.class_of[0];

  // mats[i](j, l) = number of x in class i with x^{-1} rep_l in class j,
  // i.e. the multiplicity of K_l inside K_i K_j. The vector of central
  // character values is a common eigenvector of every mats[i], with
  // eigenvalue |C_i| chi(g_i) / chi(1).
  std::vector<Eigen::MatrixXd> mats(k, Eigen::MatrixXd::Zero(k, k));
  for (int i = 0; i < k; ++i) {
    for (int l = 0; l < k; ++l) {
      int rep = table.classes[l].representative;
      for (int x : table.classes[i].members) {
        int b = g.mul(g.inv(x), rep);
        mats[i](table.class_of[b], l) += 1.0;
      }
    }
  }

  int n_group = g.order();
  for (int attempt = 0;; ++attempt) {
    if (attempt >= 5)
      throw std::runtime_error("dixon_character_table: eigenvalue collision after 5 seeds");
    Rng rng(Rng::mix(seed, 0xD1C0 + attempt));
    Eigen::MatrixXcd combo = Eigen::MatrixXcd::Zero(k, k);
    for (int i = 0; i < k; ++i) {
      std::complex<double> w(2.0 * rng.real() - 1.0, 2.0 * rng.real() - 1.0);
      combo += w * mats[i].cast<std::complex<double>>();
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(combo);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("dixon_character_table: eigensolver failed");
    // distinct eigenvalues required for clean one-dimensional eigenspaces
    bool collision = false;
    for (int i = 0; i < k && !collision; ++i)
      for (int j = i + 1; j < k; ++j)
        if (std::abs(solver.eigenvalues()[i] - solver.eigenvalues()[j]) <
            1e-8 * (1.0 + std::abs(solver.eigenvalues()[i]))) {
          collision = true;
          break;
        }
    if (collision) continue;

    std::vector<std::vector<std::complex<double>>> chars;
    std::vector<int> degrees;
    bool valid = true;
    for (int v = 0; v < k && valid; ++v) {
      Eigen::VectorXcd w = solver.eigenvectors().col(v);
      std::complex<double> at_id = w[identity_class];
      if (std::abs(at_id) < 1e-12) {
        valid = false;
        break;
      }
      w /= at_id; // central character normalization: value 1 on the identity class
      // chi(1)^2 * sum_j |w_j|^2 / |C_j| = |G|
      double s = 0;
      for (int j = 0; j < k; ++j) s += std::norm(w[j]) / table.classes[j].members.size();
      double deg = std::sqrt(static_cast<double>(n_group) / s);
      int deg_round = static_cast<int>(std::llround(deg));
      if (std::abs(deg - deg_round) > 1e-6 * std::max(1.0, deg) || deg_round < 1) {
        valid = false;
        break;
      }
      std::vector<std::complex<double>> chi(k);
      for (int j = 0; j < k; ++j)
        chi[j] = w[j] * static_cast<double>(deg_round) /
                 static_cast<double>(table.classes[j].members.size());
      chars.push_back(std::move(chi));
      degrees.push_back(deg_round);
    }
    if (!valid) continue;

    long long deg_sq = 0;
    for (int d : degrees) deg_sq += static_cast<long long>(d) * d;
    if (deg_sq != n_group) continue;

    // row orthogonality under the class-weighted inner product
    double worst = 0;
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) {
        std::complex<double> ip(0, 0);
        for (int j = 0; j < k; ++j)
          ip += static_cast<double>(table.classes[j].members.size()) * chars[p][j] *
                std::conj(chars[q][j]);
        ip /= static_cast<double>(n_group);
        double err = std::abs(ip - (p == q ? 1.0 : 0.0));
        worst = std::max(worst, err);
      }
    if (worst > 1e-6) continue;

    // deterministic presentation order
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    auto key = [&](int i) {
      std::vector<double> v{static_cast<double>(degrees[i])};
      for (int j = 0; j < k; ++j) {
        v.push_back(std::round(chars[i][j].real() * 1e9) / 1e9);
        v.push_back(std::round(chars[i][j].imag() * 1e9) / 1e9);
      }
      return v;
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    for (int i : order) {
      table.chars.push_back(chars[i]);
      table.degrees.push_back(degrees[i]);
    }
    return table;
  }
}

/// <1_H^G, chi> for every irreducible, by averaging chi over H. All values
/// must be integers (within 1e-6) for a valid table.
inline std::vector<int> multiplicity_via_character(const CharacterTable& table,
                                                   const std::vector<int>& subgroup) {
  if (subgroup.empty()) throw std::invalid_argument("multiplicity_via_character: empty subgroup");
  std::vector<int> out;
  for (size_t i = 0; i < table.chars.size(); ++i) {
    std::complex<double> s(0, 0);
    for (int h : subgroup) s += table.chars[i][table.class_of[h]];
    s /= static_cast<double>(subgroup.size());
    if (std::abs(s.imag()) > 1e-6 || std::abs(s.real() - std::llround(s.real())) > 1e-6)
      throw std::runtime_error("multiplicity_via_character: non-integral multiplicity");
    out.push_back(static_cast<int>(std::llround(s.real())));
  }
  return out;
}

/// Sorted (degree, multiplicity) pairs of 1_H^G, the oracle counterpart of
/// the commutant-based decomposition. Zero multiplicities are dropped.
inline std::vector<std::pair<int, int>> induced_degree_multiplicity_pairs(
    const CharacterTable& table, const std::vector<int>& subgroup) {
  std::vector<int> mult = multiplicity_via_character(table, subgroup);
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < mult.size(); ++i)
    if (mult[i] > 0) out.emplace_back(table.degrees[i], mult[i]);
  std::sort(out.begin(), out.end());
  return out;
}

/// Minimum degree of a non-trivial component of 1_H^G via the table.
inline int min_nontrivial_degree(const CharacterTable& table, const std::vector<int>& subgroup) {
  std::vector<int> mult = multiplicity_via_character(table, subgroup);
  int best = -1;
  for (size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    bool trivial = table.degrees[i] == 1;
    if (trivial) {
      // the trivial character is constant 1; degree-1 does not imply trivial
      trivial = true;
      for (int j = 0; j < table.class_count(); ++j)
        if (std::abs(table.chars[i][j] - std::complex<double>(1, 0)) > 1e-6) {
          trivial = false;
          break;
        }
    }
    if (trivial) continue;
    if (best < 0 || table.degrees[i] < best) best = table.degrees[i];
  }
  if (best < 0) throw std::runtime_error("min_nontrivial_degree: only the trivial component");
  return best;
}

struct NestedInductionReport {
  bool weak_holds = true;       // componentwise >= for J < H
  bool strictness_holds = true; // empirically strict everywhere
  std::vector<int> mult_inner;  // <1_J^G, chi>
  std::vector<int> mult_outer;  // <1_H^G, chi>
};

/// Componentwise comparison of <1_J^G, chi> against <1_H^G, chi> for nested
/// subgroups J <= H. The proof chain guarantees >=; strictness is reported,
/// not asserted.
inline NestedInductionReport check_nested_induction(const CharacterTable& table,
                                                    const std::vector<int>& inner,
                                                    const std::vector<int>& outer) {
  for (int j : inner)
    if (!std::binary_search(outer.begin(), outer.end(), j))
      throw std::invalid_argument("check_nested_induction: J not inside H");
  NestedInductionReport rep;
  rep.mult_inner = multiplicity_via_character(table, inner);
  rep.mult_outer = multiplicity_via_character(table, outer);
  for (size_t i = 0; i < rep.mult_inner.size(); ++i) {
    if (rep.mult_inner[i] < rep.mult_outer[i]) rep.weak_holds = false;
    if (rep.mult_inner[i] <= rep.mult_outer[i]) rep.strictness_holds = false;
  }
  return rep;
}

} // namespace qra
