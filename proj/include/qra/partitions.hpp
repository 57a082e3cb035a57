#pragma once

#include "qra/action.hpp"
#include "qra/character.hpp"
#include "qra/rational.hpp"

#include <stdexcept>
#include <vector>

namespace qra {

/// Partition of n with non-increasing positive parts.
struct PartitionDiagram {
  std::vector<int> parts;

  explicit PartitionDiagram(std::vector<int> p) : parts(std::move(p)) {
    int prev = 1 << 30;
    for (int v : parts) {
      if (v < 1 || v > prev) throw std::invalid_argument("partition parts must be non-increasing");
      prev = v;
    }
  }

  int n() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
  }
};

/// n! divided by the product of hook lengths, in exact big integers.
inline Int hook_degree(const PartitionDiagram& lambda) {
  int n = lambda.n();
  if (n > 60) throw std::invalid_argument("hook_degree: n <= 60");
  // column heights
  int cols = lambda.parts.empty() ? 0 : lambda.parts[0];
  std::vector<int> height(cols, 0);
  for (int r = 0; r < static_cast<int>(lambda.parts.size()); ++r)
    for (int c = 0; c < lambda.parts[r]; ++c) height[c] = r + 1;
  Int numer = 1;
  for (int i = 2; i <= n; ++i) numer *= i;
  Int denom = 1;
  for (int r = 0; r < static_cast<int>(lambda.parts.size()); ++r)
    for (int c = 0; c < lambda.parts[r]; ++c) {
      int arm = lambda.parts[r] - c - 1;
      int leg = height[c] - r - 1;
      denom *= (arm + leg + 1);
    }
  if (numer % denom != 0) throw std::logic_error("hook_degree: hook product does not divide n!");
  return numer / denom;
}

enum class TriState { kTrue, kFalse, kIndeterminate };

struct FrobeniusCheck {
  TriState status = TriState::kIndeterminate;
  long long lhs = 0; // multiplicity of the two-row component inside 1_H^G
  long long rhs = 0; // t_r(H) - t_{r-1}(H)
  long long t_r = 0;
  long long t_r_minus_1 = 0;
  int component_degree = 0;
};

/// Orbit-count identity for the two-row component: the multiplicity of the
/// component of hook degree ((n-r, r)) inside 1_H^{A_n} must equal
/// t_r(H) - t_{r-1}(H). The component is located in the table by its degree;
/// if that degree is not unique the check is indeterminate.
inline FrobeniusCheck frobenius_check(int n, const std::vector<Perm>& h_generators, int r,
                                      const CharacterTable& alternating_table,
                                      GroupPtr alternating_group) {
  if (n < 4 || n > 8) throw std::invalid_argument("frobenius_check: n in 4..8");
  if (r < 1 || 2 * r > n) throw std::invalid_argument("frobenius_check: 1 <= r <= n/2");
  for (const Perm& g : h_generators) {
    if (static_cast<int>(g.size()) != n)
      throw std::invalid_argument("frobenius_check: generator degree mismatch");
    if (!perm_is_even(g)) throw std::invalid_argument("frobenius_check: H must lie inside A_n");
  }
  FrobeniusCheck out;
  Int deg = hook_degree(PartitionDiagram({n - r, r}));
  out.component_degree = deg.convert_to<int>();

  int hits = 0, which = -1;
  for (size_t i = 0; i < alternating_table.degrees.size(); ++i)
    if (alternating_table.degrees[i] == out.component_degree) {
      ++hits;
      which = static_cast<int>(i);
    }
  out.t_r = action_on_r_subsets(n, h_generators, r);
  out.t_r_minus_1 = action_on_r_subsets(n, h_generators, r - 1);
  out.rhs = out.t_r - out.t_r_minus_1;
  if (hits != 1) {
    out.status = TriState::kIndeterminate;
    return out;
  }
  // H as explicit element ids inside A_n
  std::vector<int> h_ids;
  if (h_generators.empty())
    h_ids.push_back(0);
  else {
    std::vector<int> seed;
    for (const Perm& g : h_generators) seed.push_back(alternating_group->index_of(g));
    h_ids = alternating_group->subgroup_closure(seed);
  }
  std::vector<int> mult = multiplicity_via_character(alternating_table, h_ids);
  out.lhs = mult[which];
  out.status = out.lhs == out.rhs ? TriState::kTrue : TriState::kFalse;
  return out;
}

} // namespace qra
