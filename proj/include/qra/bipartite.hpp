#pragma once

#include "qra/action.hpp"
#include "qra/convolution.hpp"
#include "qra/isotypic.hpp"
#include "qra/linalg.hpp"
#include "qra/report.hpp"

#include <vector>

namespace qra {

/// Bipartite action graph on two copies of Omega: count(x, y) is the number
/// of s in S with s(x) = y. Regular on both sides with degree |S|.
struct BipartiteActionGraph {
  int omega = 0;
  long long s_size = 0;
  std::vector<long long> count; // row-major
  Vector singular_values;       // descending, from A^T A

  long long at(int x, int y) const { return count[static_cast<size_t>(x) * omega + y]; }
  long long max_multiplicity() const {
    long long best = 0;
    for (long long v : count) best = std::max(best, v);
    return best;
  }
};

inline BipartiteActionGraph bipartite_graph(const TransitiveAction& action,
                                            const std::vector<int>& s) {
  if (action.omega > kMaxOmega) throw std::runtime_error("bipartite_graph: omega cap exceeded");
  BipartiteActionGraph g;
  g.omega = action.omega;
  g.s_size = static_cast<long long>(s.size());
  g.count.assign(static_cast<size_t>(action.omega) * action.omega, 0);
  for (int e : s) {
    const std::vector<int>& row = action.image_row(e);
    for (int x = 0; x < action.omega; ++x)
      ++g.count[static_cast<size_t>(x) * action.omega + row[x]];
  }
  // row and column regularity, exact
  for (int x = 0; x < action.omega; ++x) {
    long long r = 0, c = 0;
    for (int y = 0; y < action.omega; ++y) {
      r += g.at(x, y);
      c += g.at(y, x);
    }
    if (r != g.s_size || c != g.s_size)
      throw std::logic_error("bipartite_graph: graph not regular");
  }
  Matrix a(action.omega, action.omega);
  for (int x = 0; x < action.omega; ++x)
    for (int y = 0; y < action.omega; ++y) a(x, y) = static_cast<double>(g.at(x, y));
  g.singular_values = singular_values(a);
  return g;
}

struct SingularBoundReport {
  BoundCheckReport top_is_degree;      // lambda_1 == |S|
  BoundCheckReport top_vector_constant;
  BoundCheckReport second_bound;       // lambda_2 <= sqrt(l_S |Omega| |S| / m_H)
  BoundCheckReport frobenius_identity; // sum lambda_i^2 == |S| |Omega|-side count
  BoundCheckReport edge_count_bound;   // edges >= (1/l) sum lambda_i^2
  int second_multiplicity = 0;         // cluster size at lambda_2
  bool multiplicity_ok = false;        // >= m_H
  long long ls = 0;
};

/// Spectral facts for the bipartite action graph: the top singular value is
/// the degree with constant vector, the second is bounded by
/// sqrt(l_S |Omega| |S| / m_H) and clusters with multiplicity at least m_H,
/// and the squared values sum to the Frobenius norm.
inline SingularBoundReport singular_bound_check(const BipartiteActionGraph& g,
                                                const TransitiveAction& action,
                                                const ActionAnalysis& analysis,
                                                const CosetTables& tables,
                                                const std::vector<int>& s) {
  SingularBoundReport out;
  const Vector& sv = g.singular_values;
  int n = g.omega;
  out.ls = s.empty() ? 0 : ell_S(action, tables, s);

  out.top_is_degree = BoundCheckReport::float_equality(
      "top-singular-value-degree", sv[0], static_cast<double>(g.s_size), 1e-8);

  // constant vector projected onto the top singular cluster keeps its norm
  {
    Matrix a(n, n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) a(x, y) = static_cast<double>(g.at(x, y));
    SymEig eig = sym_eig(Matrix(a.transpose() * a));
    Vector ones = Vector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
    double top_value = eig.values[n - 1];
    double kept = 0;
    for (int i = n - 1; i >= 0; --i) {
      if (std::abs(eig.values[i] - top_value) > 1e-7 * std::max(1.0, top_value)) break;
      double c = eig.vectors.col(i).dot(ones);
      kept += c * c;
    }
    out.top_vector_constant = BoundCheckReport::float_equality(
        "top-singular-vector-constant", std::sqrt(kept), 1.0, 1e-7);
  }

  double bound = std::sqrt(static_cast<double>(out.ls) * n * static_cast<double>(g.s_size) /
                           analysis.m_h);
  double l2 = n >= 2 ? sv[1] : 0.0;
  out.second_bound = BoundCheckReport::float_check("second-singular-value-bound", l2, bound, 1e-8);

  // sum of squared singular values equals the squared Frobenius norm (exact
  // on the right side)
  long long frob = 0;
  for (long long v : g.count) frob += v * v;
  double sumsq = 0;
  for (int i = 0; i < sv.size(); ++i) sumsq += sv[i] * sv[i];
  out.frobenius_identity = BoundCheckReport::float_equality(
      "singular-frobenius-identity", sumsq, static_cast<double>(frob), 1e-6);

  // edges >= (1/l) sum lambda_i^2 with l the max edge multiplicity
  long long edges = g.s_size * n;
  long long ell = std::max(1LL, g.max_multiplicity());
  out.edge_count_bound = BoundCheckReport::float_check(
      "edge-count-spectral-bound", sumsq / static_cast<double>(ell),
      static_cast<double>(edges), 1e-6);

  // multiplicity of the second value within the clustering tolerance
  if (n >= 2) {
    double scale = std::max(1.0, sv[0]);
    for (int i = 1; i < sv.size(); ++i)
      if (std::abs(sv[i] - sv[1]) <= 1e-7 * scale) ++out.second_multiplicity;
    if (std::abs(sv[0] - sv[1]) <= 1e-7 * scale) ++out.second_multiplicity;
    out.multiplicity_ok = out.second_multiplicity >= analysis.m_h;
  } else {
    out.second_multiplicity = 1;
    out.multiplicity_ok = true;
  }
  return out;
}

struct AlphaMapReport {
  bool identity_exact = false;   // adjacency summation equals the convolution
  BoundCheckReport ratio_bound;  // ||alpha f|| / ||f|| <= lambda_2
  double ratio = 0;
};

/// alpha(f)(y) = sum_x count(x, y) f(x) must equal (chi_S *c f)(y) exactly,
/// and the ratio ||alpha f|| / ||f|| stays within lambda_2 for zero-sum f.
inline AlphaMapReport alpha_map_check(const BipartiteActionGraph& g,
                                      const TransitiveAction& action,
                                      const std::vector<int>& s, const RatVec& f) {
  if (!f.is_zero_sum || f.is_zero())
    throw std::invalid_argument("alpha_map_check: f must be zero-sum and nonzero");
  int n = g.omega;
  AlphaMapReport out;
  // adjacency route, exact integers over f.den
  std::vector<__int128> alpha(n, 0);
  for (int y = 0; y < n; ++y) {
    __int128 acc = 0;
    for (int x = 0; x < n; ++x) acc += static_cast<__int128>(g.at(x, y)) * f.num[x];
    alpha[y] = acc;
  }
  RatVec conv = convolve(action, indicator(action.group->order(), s), f);
  out.identity_exact = true;
  for (int y = 0; y < n; ++y)
    if (alpha[y] != static_cast<__int128>(conv.num[y])) out.identity_exact = false;

  double fn = std::sqrt(to_double(f.norm2()));
  double an = std::sqrt(to_double(conv.norm2()));
  out.ratio = an / fn;
  double l2 = n >= 2 ? g.singular_values[1] : 0.0;
  out.ratio_bound = BoundCheckReport::float_check("alpha-ratio-bound", out.ratio, l2, 1e-8);
  return out;
}

} // namespace qra
