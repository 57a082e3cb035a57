#pragma once

#include "qra/action.hpp"
#include "qra/growth.hpp"
#include "qra/isotypic.hpp"
#include "qra/report.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qra {

inline constexpr int kMaxPrime = 10000;
inline constexpr int kMaxAffinePrime = 200;

struct PrimeField {
  int p = 0;

  explicit PrimeField(int prime) : p(prime) {
    if (p < 2 || p > kMaxPrime) throw std::invalid_argument("PrimeField: 2 <= p <= 10000");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
  }

  int mul(int a, int b) const { return static_cast<int>((static_cast<long long>(a) * b) % p); }
  int add(int a, int b) const { return (a + b) % p; }
};

inline int primitive_root(int p) {
  if (p == 2) return 1;
  // factor p - 1, then test candidates
  std::vector<int> primes;
  int m = p - 1;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      primes.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) primes.push_back(m);
  auto pow_mod = [&](long long base, long long exp) {
    long long r = 1 % p;
    base %= p;
    while (exp > 0) {
      if (exp & 1) r = r * base % p;
      base = base * base % p;
      exp >>= 1;
    }
    return static_cast<int>(r);
  };
  for (int g = 2; g < p; ++g) {
    bool ok = true;
    for (int q : primes)
      if (pow_mod(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("primitive_root: none found");
}

/// The 1-dimensional affine group on F_p: (a, b)(c) = a + b c, enumerated
/// explicitly as permutations of the p field elements. 2-transitivity and
/// d_H = p - 1 are asserted through the decomposition machinery.
inline TransitiveAction affine_action(int p) {
  PrimeField field(p);
  if (p > kMaxAffinePrime) throw std::invalid_argument("affine_action: p <= 200");
  Perm translation(p), scaling(p);
  int root = primitive_root(p);
  for (int c = 0; c < p; ++c) {
    translation[c] = field.add(c, 1);
    scaling[c] = field.mul(root, c);
  }
  std::vector<Perm> gens{translation};
  if (p > 2) gens.push_back(scaling);
  auto grp = std::make_shared<ExplicitGroup>(ExplicitGroup::generate(gens));
  if (grp->order() != static_cast<long long>(p) * (p - 1) && p > 2)
    throw std::logic_error("affine_action: unexpected group order");
  TransitiveAction act = natural_action(grp);
  act.name = "affine(" + std::to_string(p) + ")";
  if (p > 2 && orbit_pairs(act).count != 2)
    throw std::logic_error("affine_action: action not 2-transitive");
  return act;
}

struct FieldSubset {
  int p = 0;
  std::vector<int> members; // nonzero residues, ascending

  FieldSubset(const PrimeField& field, std::vector<int> elements)
      : p(field.p), members(std::move(elements)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int a : members)
      if (a <= 0 || a >= p) throw std::invalid_argument("FieldSubset: entries in 1..p-1");
  }
};

/// A + AA two ways: direct triple enumeration, and as S(Gamma) through the
/// affine action with S = {(a1, a2)} and Gamma = A. Both must agree.
inline std::vector<int> a_plus_aa(const PrimeField& field, const FieldSubset& a,
                                  const TransitiveAction* affine = nullptr) {
  std::vector<char> hit(field.p, 0);
  for (int a1 : a.members)
    for (int a2 : a.members)
      for (int a3 : a.members) hit[field.add(a1, field.mul(a2, a3))] = 1;
  std::vector<int> direct;
  for (int v = 0; v < field.p; ++v)
    if (hit[v]) direct.push_back(v);

  if (affine) {
    // S = {(a1, a2)}: the elements mapping c to a1 + a2 c; identified inside
    // the explicit group by their permutation
    std::vector<int> s;
    for (int a1 : a.members)
      for (int a2 : a.members) {
        Perm map(field.p);
        for (int c = 0; c < field.p; ++c) map[c] = field.add(a1, field.mul(a2, c));
        s.push_back(affine->group->index_of(map));
      }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto via_action = image_set(*affine, s, a.members);
    if (via_action != direct)
      throw std::logic_error("a_plus_aa: direct route disagrees with the action route");
  }
  return direct;
}

struct SumProductReport {
  BoundCheckReport main_bound;   // |A+AA| > q |A|^3 / (|A|^3 + q^2), exact
  bool large_case_applies = false; // |A| >= q^{2/3}
  BoundCheckReport large_case;   // |A+AA| > q/2
  bool medium_case_applies = false; // |A| = q^{1/2+delta}, delta in (0, 1/6)
  BoundCheckReport medium_case;  // |A+AA| > q^{1/2+3 delta} / 2, float right side
  double delta = 0;
  long long image_size = 0;
};

inline SumProductReport sumproduct_check(const PrimeField& field, const FieldSubset& a,
                                         const TransitiveAction* affine = nullptr) {
  if (a.members.empty()) throw std::invalid_argument("sumproduct_check: A nonempty");
  SumProductReport rep;
  auto image = a_plus_aa(field, a, affine);
  rep.image_size = static_cast<long long>(image.size());
  Int q(field.p);
  Int asz(static_cast<long long>(a.members.size()));
  Int acb = asz * asz * asz;
  Rat bound = Rat(q * acb, acb + q * q);
  rep.main_bound =
      BoundCheckReport::exact_check("sum-product-main", bound, Rat(Int(rep.image_size)), true);

  // |A| >= q^{2/3} iff |A|^3 >= q^2, exact
  rep.large_case_applies = acb >= q * q;
  if (rep.large_case_applies)
    rep.large_case = BoundCheckReport::exact_check("sum-product-large", Rat(q, Int(2)),
                                                   Rat(Int(rep.image_size)), true);

  // delta recovered in floating point with explicit gating margins
  double qd = static_cast<double>(field.p);
  rep.delta = std::log(static_cast<double>(a.members.size())) / std::log(qd) - 0.5;
  rep.medium_case_applies = rep.delta > 1e-9 && rep.delta < 1.0 / 6 - 1e-9;
  if (rep.medium_case_applies) {
    double rhs = 0.5 * std::pow(qd, 0.5 + 3 * rep.delta);
    rep.medium_case = BoundCheckReport::float_check(
        "sum-product-medium", rhs, static_cast<double>(rep.image_size), 1e-9);
  }
  return rep;
}

/// One CSV line per trial: q, |A|, |A+AA|, main bound, margin.
inline std::string sumproduct_csv_row(const PrimeField& field, const FieldSubset& a,
                                      const SumProductReport& rep) {
  return std::to_string(field.p) + "," + std::to_string(a.members.size()) + "," +
         std::to_string(rep.image_size) + "," + rat_string(rep.main_bound.lhs_q) + "," +
         rat_string(rep.main_bound.slack_q);
}

} // namespace qra
