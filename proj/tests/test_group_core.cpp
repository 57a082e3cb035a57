#include "qra/action.hpp"
#include "qra/gf2.hpp"
#include "qra/group.hpp"
#include "qra/permutation.hpp"
#include "qra/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
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

} // namespace

TEST_CASE("cycle notation parses to image arrays", "[group_core]") {
  CHECK(parse_permutation("(1 2 3)", 3) == Perm{1, 2, 0});
  CHECK(parse_permutation("", 4) == perm_identity(4));
  CHECK(parse_permutation("()", 4) == perm_identity(4));
  // hand-composed: 1->2, 2->1, 3->4, 4->5, 5->3
  CHECK(parse_permutation("(1 2)(3 4 5)", 5) == Perm{1, 0, 3, 4, 2});

  CHECK_THROWS(parse_permutation("(1 2", 3));
  CHECK_THROWS(parse_permutation("(1 1 2)", 3));
  CHECK_THROWS(parse_permutation("(1 4)", 3));
  CHECK_THROWS(parse_permutation("1 2 3", 3));
}

TEST_CASE("cycle formatting round-trips", "[group_core]") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    int n = 2 + static_cast<int>(rng.below(10));
    Perm p = perm_identity(n);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[static_cast<int>(rng.below(i + 1))]);
    CHECK(parse_permutation(format_cycles(p), n) == p);
  }
}

TEST_CASE("group closure finds classical orders", "[group_core]") {
  CHECK(s3()->order() == 6);
  auto trivial = make_group({"()"}, 4);
  CHECK(trivial->order() == 1);
  CHECK(a5()->order() == 60);
  // (2^3-1)(2^3-2)(2^3-2^2) = 168
  auto sl32 = std::make_shared<ExplicitGroup>(ExplicitGroup::generate_gf2(sln2_generators(3)));
  CHECK(sl32->order() == 168);
}

TEST_CASE("group laws hold on every element and random triples", "[group_core]") {
  for (auto grp : {s3(), s4(), a5()}) {
    const ExplicitGroup& g = *grp;
    for (int a = 0; a < g.order(); ++a) {
      CHECK(g.mul(a, 0) == a);
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(a, g.inv(a)) == 0);
      CHECK(g.mul(g.inv(a), a) == 0);
    }
    Rng rng(kDefaultSeed);
    for (int t = 0; t < 1000; ++t) {
      int a = static_cast<int>(rng.below(g.order()));
      int b = static_cast<int>(rng.below(g.order()));
      int c = static_cast<int>(rng.below(g.order()));
      REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    }
  }
}

TEST_CASE("element ordering is breadth-first with identity first", "[group_core]") {
  auto grp = s3();
  CHECK(perm_is_identity(grp->element(0)));
  // regenerating gives the identical element list
  auto again = s3();
  for (int i = 0; i < grp->order(); ++i) CHECK(grp->element(i) == again->element(i));
}

TEST_CASE("conjugacy classes partition with the size identity", "[group_core]") {
  auto classes3 = conjugacy_classes(*s3());
  std::multiset<size_t> sizes;
  for (const auto& c : classes3) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});

  auto trivial = make_group({"()"}, 3);
  CHECK(conjugacy_classes(*trivial).size() == 1);

  auto grp5 = a5();
  auto classes5 = conjugacy_classes(*grp5);
  std::multiset<size_t> sizes5;
  size_t total = 0;
  for (const auto& c : classes5) {
    sizes5.insert(c.members.size());
    total += c.members.size();
    CHECK(c.members.size() * c.centralizer.size() == 60);
    // every member conjugate to the representative
    bool found = false;
    for (int x = 0; x < grp5->order() && !found; ++x)
      found = grp5->conjugate(x, c.representative) == c.members[c.members.size() / 2];
    CHECK(found);
  }
  CHECK(total == 60);
  CHECK(sizes5 == std::multiset<size_t>{1, 12, 12, 15, 20});
}

TEST_CASE("coset actions are transitive with the right stabilizer", "[group_core]") {
  auto grp = s3();
  int t = grp->index_of(parse_permutation("(1 2)", 3));
  auto act = coset_action(grp, grp->subgroup_closure({t}));
  CHECK(act.omega == 3);
  CHECK(act.stabilizer == grp->subgroup_closure({t}));

  // H = G acts on one point
  std::vector<int> whole(grp->order());
  std::iota(whole.begin(), whole.end(), 0);
  auto one = coset_action(grp, whole);
  CHECK(one.omega == 1);

  // A5 on cosets of the centralizer of a 5-cycle: 60/5 = 12 points
  auto a = a5();
  int five = a->index_of(parse_permutation("(1 2 3 4 5)", 5));
  auto cent = a->centralizer(five);
  CHECK(cent.size() == 5);
  auto act12 = coset_action(a, cent);
  CHECK(act12.omega == 12);

  // unclosed subset refused
  CHECK_THROWS(coset_action(a, std::vector<int>{0, five == 1 ? 2 : 1}));
}

TEST_CASE("coset action of S3 on cosets of <(1 2)> matches the natural action", "[group_core]") {
  auto grp = s3();
  int t = grp->index_of(parse_permutation("(1 2)", 3));
  auto cosets = coset_action(grp, grp->subgroup_closure({t}));
  auto nat = natural_action(grp);
  // isomorphic as actions: same multiset of cycle types for every element
  for (int e = 0; e < grp->order(); ++e) {
    auto type_of = [](const std::vector<int>& img) {
      std::multiset<int> type;
      std::vector<char> seen(img.size(), 0);
      for (size_t i = 0; i < img.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = img[j]) {
          seen[j] = 1;
          ++len;
        }
        type.insert(len);
      }
      return type;
    };
    CHECK(type_of(cosets.image_row(e)) == type_of(nat.image_row(e)));
  }
}

TEST_CASE("orbit pairs: rank of standard actions", "[group_core]") {
  auto nat = natural_action(s4());
  auto orb = orbit_pairs(nat);
  CHECK(orb.count == 2); // 2-transitive

  auto reg = regular_action(s3());
  CHECK(orbit_pairs(reg).count == 6); // |G| orbitals for the regular action

  long long total = 0;
  for (int s : orb.size) total += s;
  CHECK(total == 16);
}

TEST_CASE("orbit counts on r-subsets", "[group_core]") {
  std::vector<Perm> c5{parse_permutation("(1 2 3 4 5)", 5)};
  CHECK(action_on_r_subsets(5, c5, 0) == 1);

  // independent oracle: orbits of C5 on the 10 pairs by direct enumeration
  {
    std::set<std::set<int>> pairs;
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j) pairs.insert({i, j});
    const Perm& g = c5[0];
    std::map<std::set<int>, int> orbit;
    int orbits = 0;
    for (const auto& p : pairs) {
      if (orbit.count(p)) continue;
      ++orbits;
      std::set<int> cur = p;
      for (int k = 0; k < 5; ++k) {
        std::set<int> next;
        for (int v : cur) next.insert(g[v]);
        orbit[next] = orbits;
        cur = next;
      }
    }
    CHECK(orbits == 2);
  }
  CHECK(action_on_r_subsets(5, c5, 2) == 2);

  std::vector<Perm> sn{parse_permutation("(1 2)", 6), parse_permutation("(1 2 3 4 5 6)", 6)};
  CHECK(action_on_r_subsets(6, sn, 2) == 1);
  CHECK(action_on_r_subsets(6, sn, 3) == 1);
  CHECK_THROWS(action_on_r_subsets(6, sn, 4));
}

TEST_CASE("sl2 vector actions", "[group_core]") {
  auto act = sl2_vector_action(3);
  CHECK(act.omega == 7);
  REQUIRE(act.has_explicit_group());
  CHECK(act.group->order() == 168);
  CHECK(orbit_pairs(act).count == 2);

  auto act4 = sl2_vector_action(4);
  CHECK(act4.omega == 15);
  CHECK(act4.group->order() == 20160);

  auto act5 = sl2_vector_action(5);
  CHECK(act5.omega == 31);
  CHECK_FALSE(act5.has_explicit_group());
  CHECK(orbit_pairs(act5).count == 2);
}

TEST_CASE("gf2 matrices: invariants and vector permutation round-trip", "[group_core]") {
  auto gens = sln2_generators(4);
  for (const auto& m : gens) {
    CHECK(m.invertible());
    Perm p = gf2_vector_permutation(m);
    GF2Matrix back = gf2_from_vector_permutation(p, 4);
    CHECK(back.rows == m.rows);
  }
  GF2Matrix singular;
  singular.n = 2;
  singular.rows = {1, 1};
  CHECK_FALSE(singular.invertible());
  CHECK_THROWS(ExplicitGroup::generate_gf2({singular}));
}

TEST_CASE("group order cap refuses big closures", "[group_core]") {
  // S13 has order 6227020800, far over the cap
  CHECK_THROWS(make_group({"(1 2)", "(1 2 3 4 5 6 7 8 9 10 11 12 13)"}, 13));
}

TEST_CASE("centralizer and normalizer", "[group_core]") {
  auto a = a5();
  int five = a->index_of(parse_permutation("(1 2 3 4 5)", 5));
  auto cent = a->centralizer(five);
  CHECK(cent.size() == 5);
  auto norm = a->normalizer(cent);
  CHECK(norm.size() == 10); // dihedral normalizer of C5 in A5
}
