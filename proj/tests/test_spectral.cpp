#include "qra/bipartite.hpp"
#include "qra/distributions.hpp"
#include "qra/schreier.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <sstream>

using namespace qra;

namespace {

GroupPtr make_group(const std::vector<std::string>& cycles, int degree) {
  std::vector<Perm> gens;
  for (const auto& c : cycles) gens.push_back(parse_permutation(c, degree));
  return std::make_shared<ExplicitGroup>(ExplicitGroup::generate(gens));
}

GroupPtr s4() { return make_group({"(1 2)", "(1 2 3 4)"}, 4); }
GroupPtr c6() { return make_group({"(1 2 3 4 5 6)"}, 6); }

GroupPtr agl7() { return make_group({"(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)"}, 7); }

} // namespace

TEST_CASE("schreier graph construction", "[spectral]") {
  auto grp = s4();
  auto act = natural_action(grp);

  // S = {identity}: one self-loop per vertex
  auto loops = schreier_graph(act, {0});
  for (int v = 0; v < 4; ++v) CHECK(loops.at(v, v) == 1);
  CHECK(loops.s_size == 1);

  // directed cycle from the regular action of C6 on a generator
  auto reg = regular_action(c6());
  int gen = c6()->generator_ids()[0];
  auto cyc = schreier_graph(reg, {gen});
  for (int v = 0; v < 6; ++v) CHECK(cyc.out_degree(v) == 1);
  long long offdiag = 0;
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v)
      if (u != v) offdiag += cyc.at(u, v);
  CHECK(offdiag == 6);

  // AGL1(7) with |S| = 4: total edge multiset size 4 * 7
  auto agl = agl7();
  auto nat = natural_action(agl);
  auto g4 = schreier_graph(nat, {1, 5, 9, 23});
  long long total = 0;
  for (long long c : g4.count) total += c;
  CHECK(total == 28);
  for (int v = 0; v < 7; ++v) CHECK(g4.out_degree(v) == 4);
}

TEST_CASE("exact expansion by enumeration", "[spectral]") {
  // disconnected: S inside a point stabilizer gives epsilon = 0
  auto grp = s4();
  auto act = natural_action(grp);
  int t12 = grp->index_of(parse_permutation("(1 2)", 4));
  auto disconnected = expansion_exact(schreier_graph(act, {t12}));
  CHECK(disconnected.epsilon == 0);

  // directed n-cycle: worst subset is a contiguous arc, epsilon = 1/floor(n/2)
  auto reg = regular_action(c6());
  auto cyc = schreier_graph(reg, {c6()->generator_ids()[0]});
  auto rep = expansion_exact(cyc);
  CHECK(rep.epsilon == make_rat(1, 3));

  // near-complete graph from the whole group acting regularly
  std::vector<int> whole(6);
  std::iota(whole.begin(), whole.end(), 0);
  auto full = expansion_exact(schreier_graph(reg, whole));
  // every vertex reaches all six targets once: boundary of W is |W|(6-|W|)
  CHECK(full.epsilon == Rat(3)); // min over |W| <= 3 of (6 - |W|)

  // lex and gray enumeration orders agree
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    auto s = rng.sample(grp->order(), 1 + static_cast<int>(rng.below(10)));
    auto g = schreier_graph(act, s);
    CHECK(expansion_exact(g, "lex").epsilon == expansion_exact(g, "gray").epsilon);
  }

  SchreierGraph big;
  big.omega = 23;
  CHECK_THROWS(expansion_exact(big));
}

TEST_CASE("expander corollary: hypothesis gating and the ratio bound", "[spectral]") {
  auto grp = s4();
  auto act = natural_action(grp);
  auto analysis = analyze_action(act);
  auto tables = build_coset_tables(act);
  Rng rng(kDefaultSeed);

  // S = G satisfies the hypothesis at delta = 1 (|S| = 24 >= 3 * 24 / 3)
  std::vector<int> whole(grp->order());
  std::iota(whole.begin(), whole.end(), 0);
  auto rep = check_expander_corollary(act, analysis, tables, whole, Rat(1), rng);
  CHECK(rep.hypothesis_holds);
  CHECK(rep.exact_mode);
  CHECK(rep.bound.holds);
  CHECK(rep.epsilon >= rep.threshold);

  // a tiny S fails the hypothesis: measurement only
  auto weak = check_expander_corollary(act, analysis, tables, {1}, Rat(1), rng);
  CHECK_FALSE(weak.hypothesis_holds);
}

TEST_CASE("expander corollary on AGL1(11)", "[spectral]") {
  auto agl = make_group({"(1 2 3 4 5 6 7 8 9 10 11)", "(1 2 4 8 5 10 9 7 3 6)"}, 11);
  REQUIRE(agl->order() == 110);
  auto act = natural_action(agl);
  auto analysis = analyze_action(act);
  auto tables = build_coset_tables(act);
  Rng rng(kDefaultSeed);
  // delta = 1/2: need |S| >= (5/2) * 110 / 10 = 27.5
  auto s = rng.sample(agl->order(), 40);
  auto rep = check_expander_corollary(act, analysis, tables, s, make_rat(1, 2), rng);
  CHECK(rep.hypothesis_holds);
  CHECK(rep.exact_mode);
  CHECK(rep.bound.holds);
}

TEST_CASE("bipartite action graph basics", "[spectral]") {
  auto grp = s4();
  auto act = natural_action(grp);

  // S = {identity}: the identity matrix
  auto ident = bipartite_graph(act, {0});
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(ident.at(x, y) == (x == y ? 1 : 0));

  // S = the full stabilizer of the base point: |H| at the fixed point
  auto stab_graph = bipartite_graph(act, act.stabilizer);
  CHECK(stab_graph.at(act.base_point, act.base_point) ==
        static_cast<long long>(act.stabilizer.size()));

  // max entry never exceeds ell_S
  Rng rng(3);
  auto a = make_group({"(1 2 3 4 5)", "(3 4 5)"}, 5);
  int five = a->index_of(parse_permutation("(1 2 3 4 5)", 5));
  auto act12 = coset_action(a, a->centralizer(five));
  auto tables12 = build_coset_tables(act12);
  for (int t = 0; t < 10; ++t) {
    auto s = rng.sample(a->order(), 1 + static_cast<int>(rng.below(30)));
    auto g = bipartite_graph(act12, s);
    CHECK(g.max_multiplicity() <= ell_S(act12, tables12, s));
  }
}

TEST_CASE("singular value facts", "[spectral]") {
  auto grp = s4();
  auto act = natural_action(grp);
  auto analysis = analyze_action(act);
  auto tables = build_coset_tables(act);
  Rng rng(kDefaultSeed);

  // S = {identity}: all singular values are one
  auto ident = bipartite_graph(act, {0});
  auto rep0 = singular_bound_check(ident, act, analysis, tables, {0});
  CHECK(rep0.top_is_degree.holds);
  CHECK(rep0.second_bound.holds);
  for (int i = 0; i < ident.singular_values.size(); ++i)
    CHECK(std::abs(ident.singular_values[i] - 1.0) < 1e-9);

  for (int t = 0; t < 30; ++t) {
    auto s = rng.sample(grp->order(), 1 + static_cast<int>(rng.below(grp->order())));
    auto g = bipartite_graph(act, s);
    auto rep = singular_bound_check(g, act, analysis, tables, s);
    CHECK(rep.top_is_degree.holds);
    CHECK(rep.top_vector_constant.holds);
    CHECK(rep.second_bound.holds);
    CHECK(rep.frobenius_identity.holds);
    CHECK(rep.edge_count_bound.holds);
    CHECK(rep.multiplicity_ok);
  }
}

TEST_CASE("alpha map identity and ratio bound", "[spectral]") {
  auto grp = s4();
  auto act = natural_action(grp);
  Rng rng(kDefaultSeed);

  // two-point zero-sum difference
  auto s = rng.sample(grp->order(), 5);
  auto g = bipartite_graph(act, s);
  RatVec diff;
  diff.num = {1, -1, 0, 0};
  diff.den = 1;
  diff.is_zero_sum = true;
  auto rep = alpha_map_check(g, act, s, diff);
  CHECK(rep.identity_exact);
  CHECK(rep.ratio_bound.holds);

  // random rational zero-sum functions
  for (int t = 0; t < 30; ++t) {
    RatVec f = random_zero_sum(4, rng);
    if (f.is_zero()) continue;
    auto s2 = rng.sample(grp->order(), 1 + static_cast<int>(rng.below(grp->order())));
    auto g2 = bipartite_graph(act, s2);
    auto r = alpha_map_check(g2, act, s2, f);
    CHECK(r.identity_exact);
    CHECK(r.ratio_bound.holds);
  }

  // the second singular direction attains the ratio (float route)
  {
    auto s3 = rng.sample(grp->order(), 7);
    auto g3 = bipartite_graph(act, s3);
    Matrix a(4, 4);
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y) a(x, y) = static_cast<double>(g3.at(x, y));
    SymEig eig = sym_eig(Matrix(a * a.transpose()));
    Vector v2 = eig.vectors.col(2); // second largest of the ascending order
    v2.array() -= v2.mean();
    if (v2.norm() > 1e-9) {
      double ratio = (a.transpose() * v2).norm() / v2.norm();
      CHECK(std::abs(ratio - g3.singular_values[1]) <=
            1e-6 * std::max(1.0, g3.singular_values[1]));
    }
  }
}

TEST_CASE("edge list export format", "[spectral]") {
  auto reg = regular_action(c6());
  auto cyc = schreier_graph(reg, {c6()->generator_ids()[0]});
  std::string text = export_edge_list(cyc);
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "# schreier 6 1");
  int edges = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++edges;
  CHECK(edges == 6);
}
