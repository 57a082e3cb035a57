#pragma once

#include "qra/action.hpp"
#include "qra/growth.hpp"
#include "qra/rational.hpp"
#include "qra/report.hpp"

#include <fstream>
#include <string>
#include <vector>

namespace qra {

inline constexpr int kMaxExpansionOmega = 22;

/// Directed multigraph on Omega with one edge (w, s w) per w and per s in S.
/// Stored as an Omega x Omega count matrix; edge multiset size |S||Omega|.
struct SchreierGraph {
  int omega = 0;
  long long s_size = 0;
  std::vector<long long> count; // row-major out-edge counts

  long long at(int u, int v) const { return count[static_cast<size_t>(u) * omega + v]; }
  long long out_degree(int u) const {
    long long d = 0;
    for (int v = 0; v < omega; ++v) d += at(u, v);
    return d;
  }
};

inline SchreierGraph schreier_graph(const TransitiveAction& action, const std::vector<int>& s) {
  if (s.empty()) throw std::invalid_argument("schreier_graph: S must be nonempty");
  SchreierGraph g;
  g.omega = action.omega;
  g.s_size = static_cast<long long>(s.size());
  g.count.assign(static_cast<size_t>(action.omega) * action.omega, 0);
  for (int e : s) {
    const std::vector<int>& row = action.image_row(e);
    for (int w = 0; w < action.omega; ++w)
      ++g.count[static_cast<size_t>(w) * action.omega + row[w]];
  }
  for (int w = 0; w < action.omega; ++w)
    if (g.out_degree(w) != g.s_size) throw std::logic_error("schreier_graph: degree mismatch");
  return g;
}

/// Plain-text edge list: header line, then one `u v multiplicity` line per
/// distinct edge (1-based vertices).
inline std::string export_edge_list(const SchreierGraph& g) {
  std::string out = "# schreier " + std::to_string(g.omega) + " " + std::to_string(g.s_size) + "\n";
  for (int u = 0; u < g.omega; ++u)
    for (int v = 0; v < g.omega; ++v)
      if (g.at(u, v) > 0)
        out += std::to_string(u + 1) + " " + std::to_string(v + 1) + " " +
               std::to_string(g.at(u, v)) + "\n";
  return out;
}

struct ExpansionReport {
  Rat epsilon;                 // min |dW| / |W| over nonempty W, |W| <= |Omega|/2
  std::vector<int> worst_set;  // a minimizing W
  long long subsets_checked = 0;
};

namespace detail {

/// Out-boundary edge count of W, multiplicities included.
inline long long boundary_of(const SchreierGraph& g, unsigned mask) {
  long long total = 0;
  for (int u = 0; u < g.omega; ++u) {
    if (!((mask >> u) & 1u)) continue;
    for (int v = 0; v < g.omega; ++v)
      if (!((mask >> v) & 1u)) total += g.at(u, v);
  }
  return total;
}

} // namespace detail

/// Exact edge expansion by enumeration of all candidate subsets, in the
/// given iteration order ("lex" ascending masks or "gray" reflected code).
/// Both orders must agree; the suite asserts that.
inline ExpansionReport expansion_exact(const SchreierGraph& g, const std::string& order = "lex") {
  if (g.omega > kMaxExpansionOmega)
    throw std::runtime_error("expansion_exact: omega cap " +
                             std::to_string(kMaxExpansionOmega) + " exceeded");
  unsigned total = 1u << g.omega;
  ExpansionReport rep;
  bool first = true;
  auto consider = [&](unsigned mask) {
    int size = __builtin_popcount(mask);
    if (size == 0 || 2 * size > g.omega) return;
    ++rep.subsets_checked;
    Rat ratio(Int(detail::boundary_of(g, mask)), Int(size));
    if (first || ratio < rep.epsilon) {
      first = false;
      rep.epsilon = ratio;
      rep.worst_set.clear();
      for (int v = 0; v < g.omega; ++v)
        if ((mask >> v) & 1u) rep.worst_set.push_back(v);
    }
  };
  if (order == "lex") {
    for (unsigned mask = 1; mask < total; ++mask) consider(mask);
  } else if (order == "gray") {
    for (unsigned i = 1; i < total; ++i) consider(i ^ (i >> 1));
  } else {
    throw std::invalid_argument("expansion_exact: unknown order");
  }
  return rep;
}

struct ExpanderCorollaryReport {
  bool hypothesis_holds = false;
  Rat threshold;          // delta / (4 + delta)
  bool exact_mode = false;
  BoundCheckReport bound; // epsilon >= threshold, or the sampled per-subset form
  Rat epsilon;            // exact mode only
};

/// |S| >= min{(2+delta)|G|/d_H, (2+delta) l_S |Omega| / m_H} forces the
/// Schreier graph to be a delta/(4+delta)-expander. Exact enumeration below
/// the omega cap; sampled subset growth above it.
inline ExpanderCorollaryReport check_expander_corollary(const TransitiveAction& action,
                                                        const ActionAnalysis& analysis,
                                                        const CosetTables& tables,
                                                        const std::vector<int>& s,
                                                        const Rat& delta, Rng& rng,
                                                        int samples = 10000) {
  if (delta <= 0) throw std::invalid_argument("check_expander_corollary: delta > 0");
  ExpanderCorollaryReport rep;
  const ExplicitGroup& g = *action.group;
  long long ls = ell_S(action, tables, s);
  Rat need1 = (Rat(2) + delta) * Int(g.order()) / Int(analysis.d_h);
  Rat need2 = (Rat(2) + delta) * Int(ls) * Int(action.omega) / Int(analysis.m_h);
  Rat s_size(static_cast<long long>(s.size()));
  rep.hypothesis_holds = s_size >= need1 || s_size >= need2;
  rep.threshold = delta / (Rat(4) + delta);

  if (action.omega <= kMaxExpansionOmega) {
    rep.exact_mode = true;
    auto exp = expansion_exact(schreier_graph(action, s));
    rep.epsilon = exp.epsilon;
    rep.bound = BoundCheckReport::exact_check("expander-ratio", rep.threshold, exp.epsilon);
    rep.bound.note = "exact enumeration";
  } else {
    // per-subset growth |S(Gamma)| > (1 + threshold) |Gamma| on samples
    bool all_hold = true;
    Rat factor = Rat(1) + rep.threshold;
    for (int t = 0; t < samples; ++t) {
      int size = 1 + static_cast<int>(rng.below(action.omega / 2));
      auto gamma = rng.sample(action.omega, size);
      long long image = static_cast<long long>(image_set(action, s, gamma).size());
      if (!(Rat(image) > factor * Int(size))) all_hold = false;
    }
    rep.bound = BoundCheckReport::exact_check("expander-subset-growth", Rat(all_hold ? 1 : 0),
                                              Rat(1));
    rep.bound.holds = all_hold;
    rep.bound.note = "sampled subsets";
  }
  return rep;
}

} // namespace qra
