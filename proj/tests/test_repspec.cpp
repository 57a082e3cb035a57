#include "qra/action.hpp"
#include "qra/character.hpp"
#include "qra/group.hpp"
#include "qra/isotypic.hpp"
#include "qra/partitions.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <set>

using namespace qra;

namespace {

GroupPtr make_group(const std::vector<std::string>& cycles, int degree) {
  std::vector<Perm> gens;
  for (const auto& c : cycles) gens.push_back(parse_permutation(c, degree));
  return std::make_shared<ExplicitGroup>(ExplicitGroup::generate(gens));
}

GroupPtr s3() { return make_group({"(1 2)", "(1 2 3)"}, 3); }
GroupPtr s4() { return make_group({"(1 2)", "(1 2 3 4)"}, 4); }
GroupPtr a5() { return make_group({"(1 2 3 4 5)", "(3 4 5)"}, 5); }
GroupPtr c2() { return make_group({"(1 2)"}, 2); }
GroupPtr c3() { return make_group({"(1 2 3)"}, 3); }

TransitiveAction a5_mod_c5() {
  auto a = a5();
  int five = a->index_of(parse_permutation("(1 2 3 4 5)", 5));
  return coset_action(a, a->centralizer(five));
}

} // namespace

TEST_CASE("commutant basis of standard actions", "[repspec]") {
  auto nat = natural_action(s4());
  auto orb = orbit_pairs(nat);
  auto basis = commutant_basis(nat, orb);
  REQUIRE(basis.size() == 2);
  // 2-transitive: identity plus all-ones-minus-identity, in either order
  Matrix sum = basis[0] + basis[1];
  CHECK(sum.isApprox(Matrix::Ones(4, 4)));
  bool has_identity = basis[0].isApprox(Matrix::Identity(4, 4)) ||
                      basis[1].isApprox(Matrix::Identity(4, 4));
  CHECK(has_identity);

  auto reg = regular_action(c3());
  auto orb3 = orbit_pairs(reg);
  auto circ = commutant_basis(reg, orb3);
  CHECK(circ.size() == 3); // three circulant basis matrices

  auto act12 = a5_mod_c5();
  auto orb12 = orbit_pairs(act12);
  auto b12 = commutant_basis(act12, orb12);
  CHECK(static_cast<int>(b12.size()) == orb12.count);
}

TEST_CASE("isotypic decomposition of small actions", "[repspec]") {
  auto dec = isotypic_decomposition(natural_action(s3()));
  auto pairs = dec.degree_multiplicity_pairs();
  CHECK(pairs == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}});
  CHECK(dec.d_min() == 2);
  CHECK(dec.m_min() == 1);

  auto reg2 = isotypic_decomposition(regular_action(c2()));
  CHECK(reg2.degree_multiplicity_pairs() == std::vector<std::pair<int, int>>{{1, 1}, {1, 1}});

  // regular C3: trivial plus a conjugate pair of linear characters
  auto reg3 = isotypic_decomposition(regular_action(c3()));
  CHECK(reg3.degree_multiplicity_pairs() ==
        std::vector<std::pair<int, int>>{{1, 1}, {1, 1}, {1, 1}});
  int pair_blocks = 0;
  for (const auto& c : reg3.components) pair_blocks += c.conjugate_pair ? 1 : 0;
  CHECK(pair_blocks == 1);
}

TEST_CASE("decomposition identities on A5 / C5", "[repspec]") {
  auto act = a5_mod_c5();
  auto dec = isotypic_decomposition(act);
  auto orb = orbit_pairs(act);

  // sum m_i d_i = |Omega|, sum m_i^2 = rank
  long long md = 0, mm = 0;
  for (auto [d, m] : dec.degree_multiplicity_pairs()) {
    md += static_cast<long long>(d) * m;
    mm += static_cast<long long>(m) * m;
  }
  CHECK(md == 12);
  CHECK(mm == orb.count);
  CHECK(orb.count == 4);

  CHECK(dec.degree_multiplicity_pairs() ==
        std::vector<std::pair<int, int>>{{1, 1}, {3, 1}, {3, 1}, {5, 1}});
  CHECK(dec.d_min() == 3);
  CHECK(dec.m_min() == 1);
}

TEST_CASE("two-transitive actions have d = omega - 1", "[repspec]") {
  auto dec4 = isotypic_decomposition(natural_action(s4()));
  CHECK(dec4.d_min() == 3);
  CHECK(dec4.m_min() == 1);

  auto sl3 = sl2_vector_action(3);
  auto dec7 = isotypic_decomposition(sl3);
  CHECK(dec7.d_min() == 6); // 2^3 - 2
  CHECK(dec7.m_min() == 1);

  // generator-only large action still analyzable
  auto sl5 = sl2_vector_action(5);
  auto dec31 = isotypic_decomposition(sl5);
  CHECK(dec31.d_min() == 30);
}

TEST_CASE("generator invariance of component subspaces", "[repspec]") {
  auto act = a5_mod_c5();
  auto dec = isotypic_decomposition(act);
  for (const auto& comp : dec.components) {
    for (const auto& img : act.gen_images) {
      // Y_g V: row w of V moves to row g(w)
      Matrix yv(act.omega, comp.basis.cols());
      for (int w = 0; w < act.omega; ++w) yv.row(img[w]) = comp.basis.row(w);
      Matrix proj = comp.basis * (comp.basis.transpose() * yv);
      CHECK((yv - proj).norm() <= 1e-7 * comp.basis.norm() * std::sqrt(act.omega));
    }
  }
}

TEST_CASE("decomposition is deterministic", "[repspec]") {
  auto d1 = isotypic_decomposition(a5_mod_c5());
  auto d2 = isotypic_decomposition(a5_mod_c5());
  CHECK(d1.degree_multiplicity_pairs() == d2.degree_multiplicity_pairs());
  REQUIRE(d1.components.size() == d2.components.size());
  for (size_t i = 0; i < d1.components.size(); ++i)
    CHECK(d1.components[i].basis.isApprox(d2.components[i].basis, 1e-12));
}

TEST_CASE("dixon character tables of small groups", "[repspec]") {
  auto t3 = dixon_character_table(c3());
  REQUIRE(t3.degrees == std::vector<int>{1, 1, 1});
  // cube roots of unity appear as values
  bool found_nonreal = false;
  for (const auto& row : t3.chars)
    for (const auto& v : row)
      if (std::abs(v.imag()) > 0.5) found_nonreal = true;
  CHECK(found_nonreal);

  auto ts3 = dixon_character_table(s3());
  CHECK(ts3.degrees == std::vector<int>{1, 1, 2});

  auto ta5 = dixon_character_table(a5());
  CHECK(ta5.degrees == std::vector<int>{1, 3, 3, 4, 5});
  long long sq = 0;
  for (int d : ta5.degrees) sq += static_cast<long long>(d) * d;
  CHECK(sq == 60);
}

TEST_CASE("multiplicities via the character table", "[repspec]") {
  auto a = a5();
  auto table = dixon_character_table(a);

  // H = G: only the trivial character appears
  std::vector<int> whole(a->order());
  std::iota(whole.begin(), whole.end(), 0);
  auto mu = multiplicity_via_character(table, whole);
  int total = 0;
  for (size_t i = 0; i < mu.size(); ++i) {
    total += mu[i];
    if (table.degrees[i] == 1) CHECK(mu[i] == 1);
  }
  CHECK(total == 1);

  // H = {1}: the regular character, multiplicities are the degrees
  auto reg = multiplicity_via_character(table, {0});
  CHECK(reg == table.degrees);

  // H = C5: cross-check sum of mult * deg = 12
  int five = a->index_of(parse_permutation("(1 2 3 4 5)", 5));
  auto c5 = a->centralizer(five);
  auto m5 = multiplicity_via_character(table, c5);
  long long sum = 0;
  for (size_t i = 0; i < m5.size(); ++i) sum += static_cast<long long>(m5[i]) * table.degrees[i];
  CHECK(sum == 12);
}

TEST_CASE("commutant decomposition agrees with the character oracle", "[repspec]") {
  struct Case {
    TransitiveAction action;
    GroupPtr group;
    std::vector<int> stab;
  };
  std::vector<Case> cases;
  {
    auto g = s4();
    cases.push_back({natural_action(g), g, {}});
  }
  {
    auto g = a5();
    int five = g->index_of(parse_permutation("(1 2 3 4 5)", 5));
    cases.push_back({coset_action(g, g->centralizer(five)), g, g->centralizer(five)});
  }
  {
    auto g = make_group({"(1 3 2 4)(5 7 6 8)", "(1 5 2 6)(3 8 4 7)"}, 8); // Q8
    REQUIRE(g->order() == 8);
    cases.push_back({regular_action(g), g, {0}});
  }
  for (auto& c : cases) {
    if (c.stab.empty()) c.stab = c.action.stabilizer;
    auto dec = isotypic_decomposition(c.action);
    auto table = dixon_character_table(c.group);
    CHECK(dec.degree_multiplicity_pairs() == induced_degree_multiplicity_pairs(table, c.stab));
  }
}

TEST_CASE("hook length degrees", "[repspec]") {
  CHECK(hook_degree(PartitionDiagram({7})) == 1);
  CHECK(hook_degree(PartitionDiagram({18, 2})) == 170);     // n = 20: 20*17/2
  CHECK(hook_degree(PartitionDiagram({17, 2, 1})) == 1920); // n = 20: 20*18*16/3
  CHECK(hook_degree(PartitionDiagram({19, 1})) == 19);
  CHECK(hook_degree(PartitionDiagram({2, 1, 1, 1})) == 4);  // conjugate of (4,1)

  // the seven closed forms for 15 <= n <= 30
  for (int n = 15; n <= 30; ++n) {
    Int nn = n;
    CHECK(hook_degree(PartitionDiagram({n})) == 1);
    CHECK(hook_degree(PartitionDiagram({n - 1, 1})) == nn - 1);
    CHECK(hook_degree(PartitionDiagram({n - 2, 2})) == nn * (nn - 3) / 2);
    CHECK(hook_degree(PartitionDiagram({n - 2, 1, 1})) == (nn - 1) * (nn - 2) / 2);
    CHECK(hook_degree(PartitionDiagram({n - 3, 3})) == nn * (nn - 1) * (nn - 5) / 6);
    CHECK(hook_degree(PartitionDiagram({n - 3, 1, 1, 1})) == (nn - 1) * (nn - 2) * (nn - 3) / 6);
    CHECK(hook_degree(PartitionDiagram({n - 3, 2, 1})) == nn * (nn - 2) * (nn - 4) / 3);
  }
  CHECK_THROWS(hook_degree(PartitionDiagram({61})));
  CHECK_THROWS(PartitionDiagram({2, 3}));
}

TEST_CASE("frobenius orbit-count identity", "[repspec]") {
  auto a5grp = a5();
  auto t5 = dixon_character_table(a5grp);

  // transitive H: both sides vanish at r = 1
  auto f1 = frobenius_check(5, {parse_permutation("(1 2 3 4 5)", 5)}, 1, t5, a5grp);
  CHECK(f1.status == TriState::kTrue);
  CHECK(f1.lhs == 0);
  CHECK(f1.rhs == 0);

  // C5 at r = 2: t_2 - t_1 = 2 - 1 = 1
  auto f2 = frobenius_check(5, {parse_permutation("(1 2 3 4 5)", 5)}, 2, t5, a5grp);
  CHECK(f2.status == TriState::kTrue);
  CHECK(f2.t_r == 2);
  CHECK(f2.rhs == 1);

  // H = A_n itself: 0 = 1 - 1
  auto f3 = frobenius_check(
      5, {parse_permutation("(1 2 3 4 5)", 5), parse_permutation("(3 4 5)", 5)}, 2, t5, a5grp);
  CHECK(f3.status == TriState::kTrue);
  CHECK(f3.lhs == 0);

  // odd generators rejected
  CHECK_THROWS(frobenius_check(5, {parse_permutation("(1 2)", 5)}, 1, t5, a5grp));
}

TEST_CASE("frobenius identity is indeterminate on ambiguous degrees", "[repspec]") {
  auto a6 = make_group({"(1 2 3 4 5)", "(4 5 6)"}, 6);
  REQUIRE(a6->order() == 360);
  auto t6 = dixon_character_table(a6);
  // A6 has two degree-5 irreducibles, so (5,1) cannot be located by degree
  auto f = frobenius_check(6, {parse_permutation("(1 2 3 4 5)", 6)}, 1, t6, a6);
  CHECK(f.status == TriState::kIndeterminate);
  // (4,2) has degree 9, unique in the table
  auto f2 = frobenius_check(6, {parse_permutation("(1 2 3 4 5)", 6)}, 2, t6, a6);
  CHECK(f2.status == TriState::kTrue);
}

TEST_CASE("nested subgroups only gain components", "[repspec]") {
  auto g = s4();
  auto table = dixon_character_table(g);

  // J = {1}: multiplicities are the degrees; implies m_H <= d_H for any H
  auto whole_strict = check_nested_induction(table, {0}, g->subgroup_closure({0}));
  CHECK(whole_strict.weak_holds);

  int r4 = g->index_of(parse_permutation("(1 2 3 4)", 4));
  int f2 = g->index_of(parse_permutation("(1 3)", 4));
  auto d8 = g->subgroup_closure({r4, f2});
  REQUIRE(d8.size() == 8);
  int c2id = g->index_of(parse_permutation("(1 3)(2 4)", 4));
  auto c2sub = g->subgroup_closure({c2id});

  auto rep = check_nested_induction(table, c2sub, d8);
  CHECK(rep.weak_holds);

  auto eq = check_nested_induction(table, d8, d8);
  CHECK(eq.weak_holds);
  CHECK_FALSE(eq.strictness_holds);
  CHECK(eq.mult_inner == eq.mult_outer);
}

TEST_CASE("dixon handles a medium group: A7 with 9 classes", "[repspec]") {
  auto a7 = make_group({"(1 2 3 4 5 6 7)", "(5 6 7)"}, 7);
  REQUIRE(a7->order() == 2520);
  auto t = dixon_character_table(a7);
  CHECK(t.degrees == std::vector<int>{1, 6, 10, 10, 14, 14, 15, 21, 35});

  int seven = a7->index_of(parse_permutation("(1 2 3 4 5 6 7)", 7));
  auto c7 = a7->centralizer(seven);
  REQUIRE(c7.size() == 7);
  CHECK(induced_degree_multiplicity_pairs(t, c7) ==
        std::vector<std::pair<int, int>>{
            {1, 1}, {10, 1}, {10, 1}, {14, 2}, {14, 2}, {15, 3}, {21, 3}, {35, 5}});
}

TEST_CASE("A7 on cosets of C7: commutant method matches the oracle", "[repspec]") {
  auto a7 = make_group({"(1 2 3 4 5 6 7)", "(5 6 7)"}, 7);
  int seven = a7->index_of(parse_permutation("(1 2 3 4 5 6 7)", 7));
  auto c7 = a7->centralizer(seven);
  auto act = coset_action(a7, c7);
  REQUIRE(act.omega == 360);
  auto dec = isotypic_decomposition(act);
  CHECK(dec.rank == 54);
  CHECK(dec.d_min() == 10);
  CHECK(dec.m_min() == 1);
  auto table = dixon_character_table(a7);
  CHECK(dec.degree_multiplicity_pairs() == induced_degree_multiplicity_pairs(table, c7));
}
