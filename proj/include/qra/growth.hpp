#pragma once

#include "qra/action.hpp"
#include "qra/character.hpp"
#include "qra/convolution.hpp"
#include "qra/isotypic.hpp"
#include "qra/report.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace qra {

/// S(Gamma) = { s(w) : s in S, w in Gamma }, exact, ascending point order.
inline std::vector<int> image_set(const TransitiveAction& action, const std::vector<int>& s,
                                  const std::vector<int>& gamma) {
  std::vector<char> hit(action.omega, 0);
  for (int e : s) {
    const std::vector<int>& row = action.image_row(e);
    for (int w : gamma) hit[row[w]] = 1;
  }
  std::vector<int> out;
  for (int w = 0; w < action.omega; ++w)
    if (hit[w]) out.push_back(w);
  return out;
}

struct GrowthBounds {
  BoundCheckReport degree_bound;            // strict: |S(Gamma)| > bound
  BoundCheckReport multiplicity_bound;      // strict
  BoundCheckReport degree_min_form;         // bound >= min{|Omega|/2, ...}
  BoundCheckReport multiplicity_min_form;
  long long image_size = 0;
  long long ls = 0;
};

/// The two strict growth lower bounds for |S(Gamma)|, plus the min-form
/// second inequalities of each display, all exact.
inline GrowthBounds growth_bounds(const TransitiveAction& action, const ActionAnalysis& analysis,
                                  const CosetTables& tables, const std::vector<int>& s,
                                  const std::vector<int>& gamma) {
  if (s.empty() || gamma.empty()) throw std::invalid_argument("growth_bounds: empty input set");
  const ExplicitGroup& g = *action.group;
  GrowthBounds out;
  out.image_size = static_cast<long long>(image_set(action, s, gamma).size());
  out.ls = ell_S(action, tables, s);
  Rat img(static_cast<long long>(out.image_size));
  Rat omega(static_cast<long long>(action.omega));
  Rat ssize(static_cast<long long>(s.size())), gsize(static_cast<long long>(gamma.size()));

  Rat ratio1 = Rat(Int(g.order())) * omega / (Rat(Int(analysis.d_h)) * ssize * gsize);
  Rat bound1 = omega / (1 + ratio1);
  out.degree_bound = BoundCheckReport::exact_check("growth-bound-degree", bound1, img, true);

  Rat ratio2 = Rat(Int(out.ls)) * omega * omega / (Rat(Int(analysis.m_h)) * ssize * gsize);
  Rat bound2 = omega / (1 + ratio2);
  out.multiplicity_bound =
      BoundCheckReport::exact_check("growth-bound-multiplicity", bound2, img, true);

  Rat min1 = std::min(Rat(omega / 2),
                      Rat(Rat(Int(analysis.d_h)) * ssize * gsize / (2 * Int(g.order()))));
  out.degree_min_form = BoundCheckReport::exact_check("growth-bound-degree-min-form", min1, bound1);
  Rat min2 = std::min(Rat(omega / 2), Rat(Rat(Int(analysis.m_h)) * ssize * gsize /
                                          (Rat(2) * Int(out.ls) * omega)));
  out.multiplicity_min_form =
      BoundCheckReport::exact_check("growth-bound-multiplicity-min-form", min2, bound2);
  return out;
}

struct TripleWitness {
  int element = 0;
  int omega_1 = 0;
  int omega_2 = 0;
};

/// Exhaustive search for g in S, w1 in Delta1 with g(w1) in Delta2;
/// lexicographically first in (element id, w1) order. When
/// |S||D1||D2| >= |Omega|^2 |G| / d_H a witness must exist.
inline std::optional<TripleWitness> find_triple(const TransitiveAction& action,
                                                std::vector<int> s, std::vector<int> delta1,
                                                const std::vector<int>& delta2) {
  std::sort(s.begin(), s.end());
  std::sort(delta1.begin(), delta1.end());
  std::vector<char> in2(action.omega, 0);
  for (int w : delta2) in2[w] = 1;
  for (int e : s) {
    const std::vector<int>& row = action.image_row(e);
    for (int w : delta1)
      if (in2[row[w]]) return TripleWitness{e, w, row[w]};
  }
  return std::nullopt;
}

inline bool triple_hypothesis_holds(const TransitiveAction& action, const ActionAnalysis& analysis,
                                    size_t s_size, size_t d1_size, size_t d2_size) {
  // |S||D1||D2| >= |Omega|^2 |G| / d_H, exact
  Int lhs = Int(s_size) * Int(d1_size) * Int(d2_size) * analysis.d_h;
  Int rhs = Int(action.omega) * action.omega * action.group->order();
  return lhs >= rhs;
}

/// (S u S^-1)^m with words of exactly length m; identity need not belong.
inline std::vector<int> product_power(const ExplicitGroup& g, const std::vector<int>& s, int m) {
  if (m < 1) throw std::invalid_argument("product_power: m >= 1");
  std::vector<char> base(g.order(), 0);
  for (int e : s) {
    base[e] = 1;
    base[g.inv(e)] = 1;
  }
  std::vector<int> sym;
  for (int e = 0; e < g.order(); ++e)
    if (base[e]) sym.push_back(e);
  std::vector<int> current = sym;
  for (int step = 1; step < m; ++step) {
    std::vector<char> next(g.order(), 0);
    for (int a : current)
      for (int b : sym) next[g.mul(a, b)] = 1;
    current.clear();
    for (int e = 0; e < g.order(); ++e)
      if (next[e]) current.push_back(e);
  }
  return current;
}

/// l_C in single-coset form (valid since C is conjugation invariant), with
/// the l_C <= |H| cap asserted. `action` must be the conjugation action of G
/// on C, whose base-point stabilizer is the centralizer H.
inline long long ell_C(const TransitiveAction& action, const std::vector<int>& class_members) {
  long long value = ell_single_coset(action, class_members);
  if (value > static_cast<long long>(action.stabilizer.size()))
    throw std::logic_error("ell_C: exceeded |H|");
  return value;
}

struct CoverageCertificate {
  bool hypotheses_hold = false;
  bool size_hypothesis = false;      // |A| >= |C| / 2
  bool degree_hypothesis = false;    // d_H > (8/k) |H| l_C
  int k = 0;
  long long ell_c = 0;
  bool covered = false;
  int exponent = 0;                  // smallest m with C inside (A u A^-1)^m
  int exponent_limit = 0;            // 5 + 10k
  std::vector<long long> class_intersections; // |(A u A^-1)^j ∩ C| per step
  // proof-style trace
  long long a2_size = 0;             // |union_a a A a^-1|
  long long min_bg_size = 0;
  std::vector<int> greedy_x;         // elements picked by the greedy stage
  bool greedy_within_k = true;
};

/// Conjugacy-class coverage by bounded products of a large subset. Coverage
/// is decided by direct power computation; the proof-style construction
/// (A_2, the B_g sets, the greedy X) is recorded alongside. When both
/// hypotheses hold, coverage within 5 + 10k products is asserted by the
/// caller.
inline CoverageCertificate gowers_trick(GroupPtr group, const TransitiveAction& conj_action,
                                        const ActionAnalysis& analysis,
                                        const std::vector<int>& class_members,
                                        const std::vector<int>& a_subset, int k) {
  const ExplicitGroup& g = *group;
  std::vector<char> in_class(g.order(), 0);
  for (int c : class_members) in_class[c] = 1;
  for (int a : a_subset)
    if (!in_class[a]) throw std::invalid_argument("gowers_trick: A must lie inside C");
  CoverageCertificate cert;
  cert.k = k;
  cert.exponent_limit = 5 + 10 * k;
  cert.ell_c = ell_C(conj_action, class_members);
  cert.size_hypothesis = 2 * a_subset.size() >= class_members.size();
  // d_H > (8/k) |H| l_C, exact via cross multiplication
  long long h_size = static_cast<long long>(conj_action.stabilizer.size());
  cert.degree_hypothesis =
      static_cast<long long>(analysis.d_h) * k > 8 * h_size * cert.ell_c;
  cert.hypotheses_hold = cert.size_hypothesis && cert.degree_hypothesis;

  // proof-style trace: A2 = union of a A a^-1, B_g = {a^-1 g a}
  {
    std::vector<char> a2(g.order(), 0);
    for (int a : a_subset)
      for (int b : a_subset) a2[g.conjugate(a, b)] = 1;
    for (int e = 0; e < g.order(); ++e)
      if (a2[e]) ++cert.a2_size;
    std::vector<char> covered_mark = a2;
    cert.min_bg_size = static_cast<long long>(g.order()) + 1;
    std::vector<std::vector<int>> bg_of(class_members.size());
    for (size_t ci = 0; ci < class_members.size(); ++ci) {
      std::vector<char> seen(g.order(), 0);
      std::vector<int>& bg = bg_of[ci];
      for (int a : a_subset) {
        int v = g.conjugate(g.inv(a), class_members[ci]);
        if (!seen[v]) {
          seen[v] = 1;
          bg.push_back(v);
        }
      }
      cert.min_bg_size = std::min(cert.min_bg_size, static_cast<long long>(bg.size()));
    }
    // greedy X: add g1 in C \ A2 whose B_g1 misses A2 and all previous B_g
    for (size_t ci = 0; ci < class_members.size(); ++ci) {
      int g1 = class_members[ci];
      if (a2[g1]) continue;
      bool misses = true;
      for (int v : bg_of[ci])
        if (covered_mark[v]) {
          misses = false;
          break;
        }
      if (misses) {
        cert.greedy_x.push_back(g1);
        for (int v : bg_of[ci]) covered_mark[v] = 1;
      }
    }
    cert.greedy_within_k = static_cast<int>(cert.greedy_x.size()) <= k;
  }

  // direct coverage: powers of A u A^-1 until C is contained, growth stops,
  // or the exponent limit is passed
  {
    std::vector<char> base(g.order(), 0);
    for (int a : a_subset) {
      base[a] = 1;
      base[g.inv(a)] = 1;
    }
    std::vector<int> sym;
    for (int e = 0; e < g.order(); ++e)
      if (base[e]) sym.push_back(e);
    std::vector<std::vector<char>> history;
    std::vector<char> current(g.order(), 0);
    for (int e : sym) current[e] = 1;
    for (int m = 1; m <= cert.exponent_limit; ++m) {
      long long inter = 0;
      bool contains = true;
      for (int c : class_members) {
        if (current[c]) ++inter;
        else contains = false;
      }
      cert.class_intersections.push_back(inter);
      if (contains) {
        cert.covered = true;
        cert.exponent = m;
        break;
      }
      // stabilized with period two: no further growth possible
      if (history.size() >= 2 && current == history[history.size() - 2]) break;
      history.push_back(current);
      std::vector<char> next(g.order(), 0);
      for (int e = 0; e < g.order(); ++e) {
        if (!current[e]) continue;
        for (int b : sym) next[g.mul(e, b)] = 1;
      }
      current.swap(next);
    }
  }
  return cert;
}

struct SimplesTrace {
  bool size_hypothesis = false;       // |S| >= (1/d_H)^{1-alpha} |C|
  bool intersection_hypothesis = false; // |S ∩ C| >= (1/d_H)^3 |C|
  bool hypotheses_hold = false;
  int iterations = 0;                 // ceil(3 / alpha)
  std::vector<long long> class_intersections; // |(S u S^-1)^{2j-1} ∩ C|
  bool conclusion_holds = false;      // final >= |C| / 2
};

/// Iterated growth of a set through a conjugacy class: records
/// |(S u S^-1)^{2j-1} ∩ C| for j = 1..ceil(3/alpha) and checks the
/// half-class conclusion under the two hypotheses.
inline SimplesTrace simples_growth(GroupPtr group, const std::vector<int>& class_members,
                                   const std::vector<int>& s, double alpha) {
  if (alpha <= 0 || alpha > 1) throw std::invalid_argument("simples_growth: alpha in (0, 1]");
  const ExplicitGroup& g = *group;
  SimplesTrace trace;
  // d_H of the conjugation action equals d of the centralizer coset action
  auto conj = conjugation_action(group, class_members);
  auto analysis = analyze_action(conj);
  double dh = analysis.d_h;
  trace.size_hypothesis =
      std::log(static_cast<double>(s.size())) + (1.0 - alpha) * std::log(dh) >=
      std::log(static_cast<double>(class_members.size())) - 1e-12;
  std::vector<char> in_class(g.order(), 0);
  for (int c : class_members) in_class[c] = 1;
  long long s_cap_c = 0;
  for (int e : s)
    if (in_class[e]) ++s_cap_c;
  // exact: |S ∩ C| d_H^3 >= |C|
  trace.intersection_hypothesis =
      Int(s_cap_c) * Int(analysis.d_h) * analysis.d_h * analysis.d_h >=
      Int(class_members.size());
  trace.hypotheses_hold = trace.size_hypothesis && trace.intersection_hypothesis;
  trace.iterations = static_cast<int>(std::ceil(3.0 / alpha));

  // incremental odd powers; once the power set stops changing the remaining
  // intersections are constant
  std::vector<char> base(g.order(), 0);
  for (int e : s) {
    base[e] = 1;
    base[g.inv(e)] = 1;
  }
  std::vector<int> sym;
  for (int e = 0; e < g.order(); ++e)
    if (base[e]) sym.push_back(e);
  std::vector<char> current = base;
  auto intersection = [&] {
    long long n = 0;
    for (int c : class_members)
      if (current[c]) ++n;
    return n;
  };
  auto step = [&] {
    std::vector<char> next(g.order(), 0);
    for (int e = 0; e < g.order(); ++e) {
      if (!current[e]) continue;
      for (int b : sym) next[g.mul(e, b)] = 1;
    }
    bool changed = next != current;
    current.swap(next);
    return changed;
  };
  bool stable = false;
  trace.class_intersections.push_back(intersection());
  for (int j = 2; j <= trace.iterations; ++j) {
    if (!stable) {
      bool c1 = step();
      bool c2 = step();
      stable = !c1 && !c2;
    }
    trace.class_intersections.push_back(intersection());
  }
  trace.conclusion_holds =
      2 * trace.class_intersections.back() >= static_cast<long long>(class_members.size());
  return trace;
}

struct ConjectureProbe {
  long long max_coset_intersection = 0; // max_g |gH ∩ C|
  long long h_cap_c = 0;                // |H ∩ C|
  long long normalizer_index = 0;       // |N_G(H) : H|
  std::vector<long long> predicted;     // conjectured values for the common quantity
  bool equalities_hold = false;         // the three computed quantities agree
  bool matches_prediction = false;      // and land on a predicted value
};

inline long long euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

/// Brute-force probe of the coset-intersection conjectures for a class C
/// with centralizer H.
inline ConjectureProbe conjecture_probe(GroupPtr group, const std::vector<int>& class_members,
                                        const std::vector<int>& centralizer,
                                        std::vector<long long> predicted) {
  const ExplicitGroup& g = *group;
  ConjectureProbe probe;
  probe.predicted = std::move(predicted);
  std::vector<char> in_class(g.order(), 0);
  for (int c : class_members) in_class[c] = 1;
  std::vector<char> in_h(g.order(), 0);
  for (int h : centralizer) in_h[h] = 1;

  // max over left cosets gH of |gH ∩ C| without building the coset action:
  // walk cosets via a visited mask
  {
    std::vector<char> seen(g.order(), 0);
    for (int e = 0; e < g.order(); ++e) {
      if (seen[e]) continue;
      long long count = 0;
      for (int h : centralizer) {
        int m = g.mul(e, h);
        seen[m] = 1;
        if (in_class[m]) ++count;
      }
      probe.max_coset_intersection = std::max(probe.max_coset_intersection, count);
    }
  }
  for (int h : centralizer)
    if (in_class[h]) ++probe.h_cap_c;
  auto norm = g.normalizer(centralizer);
  probe.normalizer_index =
      static_cast<long long>(norm.size()) / static_cast<long long>(centralizer.size());
  probe.equalities_hold = probe.max_coset_intersection == probe.h_cap_c &&
                          probe.h_cap_c == probe.normalizer_index;
  probe.matches_prediction = false;
  for (long long p : probe.predicted)
    if (probe.equalities_hold && probe.max_coset_intersection == p) probe.matches_prediction = true;
  return probe;
}

struct MinimalQrReport {
  bool is_minimal = false;
  bool condition_degree = false;     // min nontrivial degree of 1_H^G >= d_i
  bool condition_subgroups = false;  // every proper F < H falls below d_i
  bool condition_size = false;       // d_i > |H|
  int d_i = 0;
  int min_degree_h = 0;
};

/// The three conditions of an i-minimal quasirandom action, evaluated
/// exactly through the character table. Proper subgroups of H are enumerated
/// by closure over extension chains.
inline MinimalQrReport minimal_qr_check(GroupPtr group, const CharacterTable& table,
                                        const std::vector<int>& subgroup, int i) {
  if (i < 1) throw std::invalid_argument("minimal_qr_check: i >= 1");
  MinimalQrReport rep;
  // distinct degrees above 1, ascending
  std::vector<int> degrees;
  for (int d : table.degrees)
    if (d > 1 && (degrees.empty() || degrees.back() != d)) degrees.push_back(d);
  if (static_cast<int>(degrees.size()) < i) return rep; // no d_i: not minimal
  rep.d_i = degrees[i - 1];

  rep.min_degree_h = min_nontrivial_degree(table, subgroup);
  rep.condition_degree = rep.min_degree_h >= rep.d_i;
  rep.condition_size = rep.d_i > static_cast<int>(subgroup.size());
  rep.condition_subgroups = true;
  for (const auto& f : group->subgroups_of(subgroup)) {
    if (f == subgroup) continue;
    if (min_nontrivial_degree(table, f) >= rep.d_i) {
      rep.condition_subgroups = false;
      break;
    }
  }
  rep.is_minimal = rep.condition_degree && rep.condition_subgroups && rep.condition_size;
  return rep;
}

} // namespace qra
