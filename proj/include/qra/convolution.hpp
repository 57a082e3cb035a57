#pragma once

#include "qra/action.hpp"
#include "qra/distributions.hpp"
#include "qra/isotypic.hpp"
#include "qra/linalg.hpp"
#include "qra/rational.hpp"
#include "qra/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qra {

inline constexpr int kMaxGroupMatrixBuild = 5000;

/// (X *c Y)(w) = sum_g X(g) Y(g^{-1} w), exact. Probability and zero-sum
/// flags propagate.
inline RatVec convolve(const TransitiveAction& action, const RatVec& x, const RatVec& y) {
  if (!action.has_explicit_group()) throw std::invalid_argument("convolve: explicit group needed");
  const ExplicitGroup& g = *action.group;
  if (x.size() != g.order() || y.size() != action.omega)
    throw std::invalid_argument("convolve: size mismatch with action");
  std::vector<__int128> acc(action.omega, 0);
  for (int e = 0; e < g.order(); ++e) {
    long long w = x.num[e];
    if (w == 0) continue;
    const std::vector<int>& row = action.image_row(e);
    for (int v = 0; v < action.omega; ++v) acc[row[v]] += static_cast<__int128>(w) * y.num[v];
  }
  RatVec out;
  out.num.resize(action.omega);
  for (int i = 0; i < action.omega; ++i) out.num[i] = detail::checked_ll(acc[i], "convolve");
  out.den = detail::checked_ll(static_cast<__int128>(x.den) * y.den, "convolve");
  out.is_probability = x.is_probability && y.is_probability;
  out.is_zero_sum = x.is_zero_sum || y.is_zero_sum;
  return out;
}

/// Right-coset index of each element (Hg as a point, via g^{-1}H).
struct CosetTables {
  std::vector<int> right_coset_of;
  int omega = 0;
};

inline CosetTables build_coset_tables(const TransitiveAction& action) {
  const ExplicitGroup& g = *action.group;
  CosetTables t;
  t.omega = action.omega;
  t.right_coset_of.resize(g.order());
  const auto& point_of = action.point_of_element();
  for (int e = 0; e < g.order(); ++e) t.right_coset_of[e] = point_of[g.inv(e)];
  return t;
}

/// l_S = max |g1 H g2 ∩ S| over all pairs; every such set equals aHb for a
/// left-transversal a and right-transversal b, and |aHb ∩ S| = |Hb ∩ a^{-1}S|.
inline long long ell_S(const TransitiveAction& action, const CosetTables& tables,
                       const std::vector<int>& s_members) {
  const ExplicitGroup& g = *action.group;
  long long best = 0;
  std::vector<int> count(action.omega);
  for (int w = 0; w < action.omega; ++w) {
    int a_inv = g.inv(action.transversal()[w]);
    std::fill(count.begin(), count.end(), 0);
    for (int s : s_members) {
      int c = tables.right_coset_of[g.mul(a_inv, s)];
      if (++count[c] > best) best = count[c];
    }
  }
  return best;
}

/// Single-coset form for conjugation-invariant subsets: max_g |C ∩ gH|.
inline long long ell_single_coset(const TransitiveAction& action, const std::vector<int>& members) {
  std::vector<long long> count(action.omega, 0);
  const auto& point_of = action.point_of_element();
  long long best = 0;
  for (int c : members) best = std::max(best, ++count[point_of[c]]);
  return best;
}

/// Dense exact circulant; kind follows the acting structure.
struct CirculantMatrix {
  bool is_group_circulant = false; // rows G, columns G; otherwise columns Omega
  int rows = 0, cols = 0;
  std::vector<long long> num; // row-major
  long long den = 1;
  Rat row_sum, col_sum; // s_r, s_c (exact, verified constant)

  long long at(int r, int c) const { return num[static_cast<size_t>(r) * cols + c]; }
};

/// B(g, w) = Y(g^{-1} w) for a function on Omega; A(g, h) = X(g^{-1} h) for
/// a function on the group (the regular-action special case). Circulant law
/// and biregularity are verified exactly.
inline CirculantMatrix circulant_of(const TransitiveAction& action, const RatVec& fn,
                                    bool group_circulant) {
  const ExplicitGroup& g = *action.group;
  if (g.order() > kMaxGroupMatrixBuild)
    throw std::runtime_error("circulant_of: group matrix cap exceeded");
  CirculantMatrix m;
  m.is_group_circulant = group_circulant;
  m.rows = g.order();
  m.cols = group_circulant ? g.order() : action.omega;
  m.den = fn.den;
  m.num.resize(static_cast<size_t>(m.rows) * m.cols);
  if (group_circulant) {
    if (fn.size() != g.order()) throw std::invalid_argument("circulant_of: function not on G");
    for (int r = 0; r < m.rows; ++r) {
      int rinv = g.inv(r);
      for (int c = 0; c < m.cols; ++c) m.num[static_cast<size_t>(r) * m.cols + c] = fn.num[g.mul(rinv, c)];
    }
  } else {
    if (fn.size() != action.omega) throw std::invalid_argument("circulant_of: function not on Omega");
    for (int r = 0; r < m.rows; ++r) {
      const std::vector<int>& row = action.image_row(g.inv(r));
      for (int c = 0; c < m.cols; ++c) m.num[static_cast<size_t>(r) * m.cols + c] = fn.num[row[c]];
    }
  }
  // circulant law M(g, w) = M(1, g^{-1} w), exact
  for (int r = 0; r < m.rows; ++r) {
    int rinv = g.inv(r);
    for (int c = 0; c < m.cols; ++c) {
      int base_col = group_circulant ? g.mul(rinv, c) : action.apply(rinv, c);
      if (m.at(r, c) != m.at(0, base_col))
        throw std::logic_error("circulant_of: circulant law violated");
    }
  }
  // biregularity with s_c = (|G| / cols) * s_r
  __int128 first_row = 0;
  for (int c = 0; c < m.cols; ++c) first_row += m.at(0, c);
  for (int r = 1; r < m.rows; ++r) {
    __int128 s = 0;
    for (int c = 0; c < m.cols; ++c) s += m.at(r, c);
    if (s != first_row) throw std::logic_error("circulant_of: row sums not constant");
  }
  __int128 first_col = 0;
  for (int r = 0; r < m.rows; ++r) first_col += m.at(r, 0);
  for (int c = 1; c < m.cols; ++c) {
    __int128 s = 0;
    for (int r = 0; r < m.rows; ++r) s += m.at(r, c);
    if (s != first_col) throw std::logic_error("circulant_of: column sums not constant");
  }
  m.row_sum = Rat(Int(static_cast<long long>(first_row)), Int(m.den));
  m.col_sum = Rat(Int(static_cast<long long>(first_col)), Int(m.den));
  if (m.col_sum * Int(m.cols) != m.row_sum * Int(g.order()))
    throw std::logic_error("circulant_of: s_c != (|G|/|cols|) s_r");
  return m;
}

namespace detail {

/// B^T B lies in the commutant, so it is determined by one coefficient per
/// orbital: beta_O = sum_u Y(u w) Y(u v) for any (w, v) in O.
inline Matrix gram_via_orbitals(const TransitiveAction& action, const Orbitals& orb,
                                const RatVec& y) {
  const ExplicitGroup& g = *action.group;
  int n = action.omega;
  std::vector<__int128> beta(orb.count, 0);
  for (int o = 0; o < orb.count; ++o) {
    auto [w, v] = orb.representative[o];
    __int128 acc = 0;
    for (int u = 0; u < g.order(); ++u) {
      const std::vector<int>& row = action.image_row(u);
      acc += static_cast<__int128>(y.num[row[w]]) * y.num[row[v]];
    }
    beta[o] = acc;
  }
  double dden = static_cast<double>(y.den) * static_cast<double>(y.den);
  Matrix out(n, n);
  for (int x = 0; x < n; ++x) {
    const int* row = orb.id.data() + static_cast<size_t>(x) * n;
    for (int v = 0; v < n; ++v)
      out(x, v) = static_cast<double>(static_cast<long long>(beta[row[v]])) / dden;
  }
  return out;
}

/// Rows of W(u, w) = Y(u w) are the rows of B in another order, so the R
/// factor of a QR of W carries the nonzero spectrum of B B^T as eig(R R^T).
inline Vector bbt_nonzero_spectrum_via_qr(const TransitiveAction& action, const RatVec& y) {
  const ExplicitGroup& g = *action.group;
  Matrix w(g.order(), action.omega);
  double den = static_cast<double>(y.den);
  for (int u = 0; u < g.order(); ++u) {
    const std::vector<int>& row = action.image_row(u);
    for (int v = 0; v < action.omega; ++v)
      w(u, v) = static_cast<double>(y.num[row[v]]) / den;
  }
  Eigen::HouseholderQR<Matrix> qr(w);
  Matrix r = qr.matrixQR().topRows(action.omega).triangularView<Eigen::Upper>();
  SymEig eig = sym_eig(r * r.transpose());
  return eig.values.reverse();
}

} // namespace detail

/// How much of the matrix-level identity suite to run; chosen from |G|.
struct Section2Mode {
  bool full_product = true;     // materialize AB exactly
  bool sampled_product = false; // first row + seeded probe vectors
  bool trace_lemma = true;      // needs the |G| x |G| spectrum
  bool dense_bbt = true;        // materialize B B^T for the spectra check
};

inline Section2Mode section2_mode(int group_order, int trial_index) {
  Section2Mode m;
  if (group_order <= 500) return m;
  if (group_order <= kMaxGroupMatrixBuild) {
    m.full_product = trial_index == 0;
    m.sampled_product = !m.full_product;
    m.trace_lemma = trial_index == 0;
    m.dense_bbt = false;
    return m;
  }
  m.full_product = false;
  m.sampled_product = false; // the G-circulant may not be materialized at all
  m.trace_lemma = false;
  m.dense_bbt = false;
  return m;
}

/// The identity suite: norm shifts, the trace formula, D = AB, the four
/// commuting identities, matching Gram spectra, the top-eigenvalue formula,
/// the spectral-gap trace bound and the product trace bound.
inline std::vector<BoundCheckReport> verify_section2_identities(
    const TransitiveAction& action, const ActionAnalysis& analysis, const RatVec& x,
    const RatVec& y, Rng& rng, const Section2Mode& mode) {
  const ExplicitGroup& g = *action.group;
  int n = action.omega;
  std::vector<BoundCheckReport> out;
  Rat omega_inv = make_rat(1, n);

  RatVec conv = convolve(action, x, y);
  RatVec y_centered = subtract(y, uniform_vec(n));
  y_centered.is_zero_sum = true;

  // norm shifts around the uniform distribution
  out.push_back(BoundCheckReport::exact_equality(
      "norm-shift-plus", add(y_centered, uniform_vec(n)).norm2(),
      y_centered.norm2() + omega_inv));
  out.push_back(BoundCheckReport::exact_equality("norm-shift-minus", y_centered.norm2(),
                                                 y.norm2() - omega_inv));
  {
    RatVec lhs = convolve(action, x, y_centered);
    RatVec rhs = subtract(conv, uniform_vec(n));
    out.push_back(
        BoundCheckReport::exact_equality("conv-uniform-shift", lhs.norm2(), rhs.norm2()));
  }
  {
    long long k = rng.range(1, 9);
    out.push_back(BoundCheckReport::exact_equality("norm-scaling", scale(y, k, 1).norm2(),
                                                   Rat(Int(k * k)) * y.norm2()));
  }

  // trace formula |G| ||Y||^2 = Tr(B B^T), entries walked through the action
  {
    Int tr = 0;
    for (int e = 0; e < g.order(); ++e) {
      const std::vector<int>& row = action.image_row(g.inv(e));
      __int128 acc = 0;
      for (int v = 0; v < n; ++v) {
        long long val = y.num[row[v]];
        acc += static_cast<__int128>(val) * val;
      }
      tr += Int(static_cast<long long>(acc));
    }
    out.push_back(BoundCheckReport::exact_equality(
        "circulant-row-norm", Rat(Int(g.order())) * y.norm2(),
        Rat(tr, Int(y.den) * y.den)));
  }

  // D = AB and the convolution trace formula
  if (mode.full_product) {
    CirculantMatrix a = circulant_of(action, x, true);
    CirculantMatrix b = circulant_of(action, y, false);
    CirculantMatrix d = circulant_of(action, conv, false);
    bool equal = true;
    Int frob = 0; // |G|^2-scaled Frobenius norm of AB
    for (int r = 0; r < g.order() && equal; ++r) {
      for (int c = 0; c < n; ++c) {
        __int128 acc = 0;
        for (int h = 0; h < g.order(); ++h)
          acc += static_cast<__int128>(a.at(r, h)) * b.at(h, c);
        // entries compare as acc / (a.den*b.den) vs d.num / d.den
        if (acc * d.den !=
            static_cast<__int128>(d.at(r, c)) * a.den * b.den) {
          equal = false;
          break;
        }
        frob += Int(static_cast<long long>(acc)) * Int(static_cast<long long>(acc));
      }
    }
    BoundCheckReport rep = BoundCheckReport::exact_equality(
        "circulant-product", Rat(equal ? 0 : 1), Rat(0));
    rep.note = "full entrywise product";
    out.push_back(rep);
    if (equal) {
      Rat tr_route(frob, Int(a.den) * a.den * Int(b.den) * b.den);
      out.push_back(BoundCheckReport::exact_equality(
          "conv-norm-trace", Rat(Int(g.order())) * conv.norm2(), tr_route));
    }
  } else if (mode.sampled_product) {
    // row 0 in full plus seeded probe vectors through A(Bv) vs Dv
    bool equal = true;
    {
      int r = 0;
      for (int c = 0; c < n && equal; ++c) {
        __int128 acc = 0;
        for (int h = 0; h < g.order(); ++h) {
          // A(0, h) = X(h), B(h, c) = Y(h^{-1} c)
          acc += static_cast<__int128>(x.num[h]) * y.num[action.apply(g.inv(h), c)];
        }
        __int128 dval = static_cast<__int128>(conv.num[action.apply(g.inv(r), c)]);
        if (acc * conv.den != dval * x.den * y.den) equal = false;
      }
    }
    for (int probe = 0; probe < 4 && equal; ++probe) {
      std::vector<long long> v(n);
      for (int i = 0; i < n; ++i) v[i] = rng.range(0, 1);
      // Bv over G
      std::vector<__int128> bv(g.order(), 0);
      for (int h = 0; h < g.order(); ++h) {
        const std::vector<int>& row = action.image_row(g.inv(h));
        __int128 acc = 0;
        for (int c = 0; c < n; ++c)
          if (v[c]) acc += y.num[row[c]];
        bv[h] = acc;
      }
      // A(Bv) vs D v on a seeded batch of rows
      for (int probe_row = 0; probe_row < 8 && equal; ++probe_row) {
        int r = static_cast<int>(rng.below(g.order()));
        int rinv = g.inv(r);
        __int128 lhs = 0;
        for (int h = 0; h < g.order(); ++h) lhs += static_cast<__int128>(x.num[g.mul(rinv, h)]) * bv[h];
        __int128 rhs = 0;
        const std::vector<int>& drow = action.image_row(rinv);
        for (int c = 0; c < n; ++c)
          if (v[c]) rhs += conv.num[drow[c]];
        if (lhs * conv.den != rhs * x.den * y.den) equal = false;
      }
    }
    BoundCheckReport rep =
        BoundCheckReport::exact_equality("circulant-product", Rat(equal ? 0 : 1), Rat(0));
    rep.note = "row 0 plus seeded probe vectors";
    out.push_back(rep);
    if (equal) {
      // trace route via the circulant of the convolution itself
      Int frob = 0;
      for (int e = 0; e < g.order(); ++e) {
        const std::vector<int>& row = action.image_row(g.inv(e));
        __int128 acc = 0;
        for (int v2 = 0; v2 < n; ++v2) {
          long long val = conv.num[row[v2]];
          acc += static_cast<__int128>(val) * val;
        }
        frob += Int(static_cast<long long>(acc));
      }
      BoundCheckReport rep2 = BoundCheckReport::exact_equality(
          "conv-norm-trace", Rat(Int(g.order())) * conv.norm2(),
          Rat(frob, Int(conv.den) * conv.den));
      rep2.note = "via the circulant of the convolution";
      out.push_back(rep2);
    }
  }

  // commuting identities; the third is quadratic in |G| and gets sampled
  {
    bool ok1 = true, ok2 = true, ok3 = true, ok4 = true;
    std::vector<int> probes = action.group->generator_ids();
    for (int extra = 0; extra < 2; ++extra)
      probes.push_back(static_cast<int>(rng.below(g.order())));
    std::vector<int> omegas;
    for (int k = 0; k < std::min(3, n); ++k) omegas.push_back(static_cast<int>(rng.below(n)));
    for (int gid : probes) {
      int ginv = g.inv(gid);
      for (int w : omegas) {
        // X_g B_w = B_w Y_g: (g^{-1} h) w == g^{-1} (h w) for all h
        for (int h = 0; h < g.order(); ++h) {
          if (action.apply(g.mul(ginv, h), w) != action.apply(ginv, action.apply(h, w))) ok1 = false;
          // Y_g B_w^T = B_w^T X_g: both send e_h to e_{(g h) w}
          if (action.apply(g.mul(gid, h), w) != action.apply(gid, action.apply(h, w))) ok2 = false;
        }
        // B_w^T B_w = |H| I, which commutes with everything
        std::vector<long long> col_count(n, 0);
        for (int h = 0; h < g.order(); ++h) ++col_count[action.apply(h, w)];
        for (int v = 0; v < n; ++v)
          if (col_count[v] != g.order() / n) ok4 = false;
        // X_g B_w B_w^T = B_w B_w^T X_g on sampled entry pairs:
        // [(g^{-1}h) w == h' w] vs [h w == (g h') w]
        for (int t = 0; t < 200; ++t) {
          int h = static_cast<int>(rng.below(g.order()));
          int h2 = static_cast<int>(rng.below(g.order()));
          bool lhs = action.apply(g.mul(ginv, h), w) == action.apply(h2, w);
          bool rhs = action.apply(h, w) == action.apply(g.mul(gid, h2), w);
          if (lhs != rhs) ok3 = false;
        }
      }
    }
    out.push_back(BoundCheckReport::exact_equality("commuting-translation-1", Rat(ok1 ? 0 : 1), Rat(0)));
    out.push_back(BoundCheckReport::exact_equality("commuting-translation-2", Rat(ok2 ? 0 : 1), Rat(0)));
    BoundCheckReport c3 = BoundCheckReport::exact_equality("commuting-translation-3",
                                                           Rat(ok3 ? 0 : 1), Rat(0));
    c3.note = "sampled entry pairs";
    out.push_back(c3);
    out.push_back(BoundCheckReport::exact_equality("commuting-translation-4", Rat(ok4 ? 0 : 1), Rat(0)));
  }

  // spectra of B B^T and B^T B agree on nonzero eigenvalues
  Orbitals const& orb = analysis.orbitals;
  Matrix btb = detail::gram_via_orbitals(action, orb, y);
  SymEig btb_eig = sym_eig(btb);
  Vector btb_desc = btb_eig.values.reverse();
  {
    Vector bbt_desc;
    if (mode.dense_bbt) {
      Matrix b(g.order(), n);
      double den = static_cast<double>(y.den);
      for (int r = 0; r < g.order(); ++r) {
        const std::vector<int>& row = action.image_row(g.inv(r));
        for (int c = 0; c < n; ++c) b(r, c) = static_cast<double>(y.num[row[c]]) / den;
      }
      SymEig bbt_eig = sym_eig(Matrix(b * b.transpose()));
      bbt_desc = bbt_eig.values.reverse();
    } else {
      bbt_desc = detail::bbt_nonzero_spectrum_via_qr(action, y);
    }
    double scale = std::max(1.0, std::abs(btb_desc[0]));
    double worst = 0;
    for (int i = 0; i < n; ++i) {
      double own = i < btb_desc.size() ? btb_desc[i] : 0.0;
      double other = i < bbt_desc.size() ? std::max(0.0, bbt_desc[i]) : 0.0;
      worst = std::max(worst, std::abs(own - other));
    }
    BoundCheckReport rep =
        BoundCheckReport::float_equality("gram-spectra-match", worst / scale, 0.0, 1e-8);
    rep.note = mode.dense_bbt ? "dense both sides" : "triangular-factor route";
    out.push_back(rep);
  }

  // top eigenvalue of the Gram equals s_r * s_c (nonnegative biregular)
  {
    Rat sr = y.sum();
    Rat sc = sr * Int(g.order()) / Int(n);
    out.push_back(BoundCheckReport::float_equality(
        "top-eigenvalue-biregular", btb_desc[0], to_double(sr * sc), 1e-8));
  }

  // lambda_2(B B^T) <= (Tr(B B^T) - lambda_1) / d_H
  {
    double tr = to_double(Rat(Int(g.order())) * y.norm2());
    double l1 = btb_desc[0];
    double l2 = n >= 2 ? btb_desc[1] : 0.0;
    out.push_back(BoundCheckReport::float_check(
        "spectral-gap-trace-bound", l2, (tr - l1) / analysis.d_h, 1e-8));
  }

  // Tr(B^T A^T A B) <= l1(A^T A) l1(B^T B) + l2(A^T A)(Tr(B^T B) - l1(B^T B))
  if (mode.trace_lemma) {
    // A^T A is the group circulant of u -> sum_v X(v) X(v u)
    Matrix ata(g.order(), g.order());
    {
      std::vector<double> corr(g.order());
      for (int u = 0; u < g.order(); ++u) {
        __int128 acc = 0;
        for (int v = 0; v < g.order(); ++v) acc += static_cast<__int128>(x.num[v]) * x.num[g.mul(v, u)];
        corr[u] = static_cast<double>(static_cast<long long>(acc)) /
                  (static_cast<double>(x.den) * x.den);
      }
      for (int r = 0; r < g.order(); ++r) {
        int rinv = g.inv(r);
        for (int c = 0; c < g.order(); ++c) ata(r, c) = corr[g.mul(rinv, c)];
      }
    }
    SymEig ata_eig = sym_eig(ata);
    double a1 = ata_eig.values[g.order() - 1];
    double a2 = g.order() >= 2 ? ata_eig.values[g.order() - 2] : 0.0;
    double b1 = btb_desc[0];
    double trb = to_double(Rat(Int(g.order())) * y.norm2());
    // lhs = |G| ||X *c Y||^2 by the trace formula
    double lhs = to_double(Rat(Int(g.order())) * conv.norm2());
    out.push_back(BoundCheckReport::float_check("product-trace-bound", lhs,
                                                a1 * b1 + a2 * (trb - b1), 1e-8));
  }

  return out;
}

/// ||X *c Y - U|| <= sqrt(|G| / d_H) ||X - U_G|| ||Y - U||, compared with
/// both sides squared so the verdict is exact.
inline BoundCheckReport check_thm_convolution_1(const TransitiveAction& action,
                                                const ActionAnalysis& analysis, const RatVec& x,
                                                const RatVec& y) {
  if (!x.is_probability || !y.is_probability)
    throw std::invalid_argument("check_thm_convolution_1: probability inputs required");
  const ExplicitGroup& g = *action.group;
  RatVec conv = convolve(action, x, y);
  Rat lhs_sq = subtract(conv, uniform_vec(action.omega)).norm2();
  Rat xdev = subtract(x, uniform_vec(g.order())).norm2();
  Rat ydev = subtract(y, uniform_vec(action.omega)).norm2();
  Rat rhs_sq = Rat(Int(g.order()), Int(analysis.d_h)) * xdev * ydev;
  BoundCheckReport rep = BoundCheckReport::exact_check("mixing-bound-degree", lhs_sq, rhs_sq);
  rep.note = "both sides squared";
  return rep;
}

/// ||chi_S *c f|| <= sqrt(l_S |Omega| / m_H) ||chi_S|| ||f||, squared.
inline BoundCheckReport check_thm_convolution_2(const TransitiveAction& action,
                                                const ActionAnalysis& analysis,
                                                const CosetTables& tables,
                                                const std::vector<int>& s_members,
                                                const RatVec& f) {
  if (!f.is_zero_sum) throw std::invalid_argument("check_thm_convolution_2: f must sum to zero");
  RatVec chi = indicator(action.group->order(), s_members);
  RatVec conv = convolve(action, chi, f);
  Rat lhs_sq = conv.norm2();
  long long ls = s_members.empty() ? 0 : ell_S(action, tables, s_members);
  Rat rhs_sq = Rat(Int(ls) * action.omega, Int(analysis.m_h)) * chi.norm2() * f.norm2();
  BoundCheckReport rep =
      BoundCheckReport::exact_check("mixing-bound-multiplicity", lhs_sq, rhs_sq);
  rep.note = "both sides squared; l_S = " + std::to_string(ls);
  return rep;
}

/// Both readings of the zero-sum mixing bound: (a) as printed with unsquared
/// norms on the right, (b) the form that follows from the degree bound with
/// squared norms. Both verdicts are exact (double squaring for (a)).
struct EndgameReport {
  BoundCheckReport as_printed;
  BoundCheckReport derived;
};

inline EndgameReport check_endgame(const TransitiveAction& action, const ActionAnalysis& analysis,
                                   const RatVec& mu, const RatVec& f) {
  if (!mu.is_probability) throw std::invalid_argument("check_endgame: mu must be a probability");
  if (!f.is_zero_sum) throw std::invalid_argument("check_endgame: f must sum to zero");
  RatVec conv = convolve(action, mu, f);
  Rat lhs_sq = conv.norm2(); // this is ||mu * f||^2 itself
  Rat ratio(Int(action.group->order()), Int(analysis.d_h));
  EndgameReport rep;
  // (a) lhs_sq <= ratio * ||mu|| ||f||: compare lhs_sq^2 <= ratio^2 ||mu||^2 ||f||^2
  rep.as_printed = BoundCheckReport::exact_check("endgame-as-printed", lhs_sq * lhs_sq,
                                                 ratio * ratio * mu.norm2() * f.norm2());
  rep.as_printed.note = "unsquared right side; verdict by squaring again";
  // (b) lhs_sq <= ratio * ||mu||^2 ||f||^2
  rep.derived = BoundCheckReport::exact_check("endgame-derived", lhs_sq,
                                              ratio * mu.norm2() * f.norm2());
  return rep;
}

} // namespace qra
