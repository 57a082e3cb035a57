#include "qra/fieldlab.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qra;

TEST_CASE("prime gate", "[fieldlab]") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(97));
  CHECK_THROWS(PrimeField(49));
  CHECK_THROWS(PrimeField(1));
  CHECK_THROWS(PrimeField(100001));
}

TEST_CASE("affine actions", "[fieldlab]") {
  auto act5 = affine_action(5);
  CHECK(act5.group->order() == 20);
  auto an5 = analyze_action(act5);
  CHECK(an5.d_h == 4);
  CHECK(an5.m_h == 1);

  auto act2 = affine_action(2);
  CHECK(act2.group->order() == 2);
  CHECK(act2.omega == 2);

  auto act7 = affine_action(7);
  CHECK(orbit_pairs(act7).count == 2);
  CHECK(analyze_action(act7).d_h == 6);

  CHECK_THROWS(affine_action(4));
  CHECK_THROWS(affine_action(211));
}

TEST_CASE("a_plus_aa: both routes agree", "[fieldlab]") {
  PrimeField f5(5);
  // A = {1} in F5: AA = {1}, A + AA = {2}
  auto one = a_plus_aa(f5, FieldSubset(f5, {1}));
  CHECK(one == std::vector<int>{2});

  PrimeField f7(7);
  auto act7 = affine_action(7);
  // full multiplicative line: everything is hit
  auto everything = a_plus_aa(f7, FieldSubset(f7, {1, 2, 3, 4, 5, 6}), &act7);
  CHECK(everything.size() == 7);

  // random subsets: the action route is cross-checked inside a_plus_aa
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 25; ++t) {
    int size = 1 + static_cast<int>(rng.below(6));
    auto picks = rng.sample(6, size);
    std::vector<int> elems;
    for (int v : picks) elems.push_back(v + 1);
    CHECK_NOTHROW(a_plus_aa(f7, FieldSubset(f7, elems), &act7));
  }
}

TEST_CASE("sum-product bounds", "[fieldlab]") {
  PrimeField f7(7);
  // A = {1,2,3}: enumerate and compare against 7*27/76
  auto rep = sumproduct_check(f7, FieldSubset(f7, {1, 2, 3}));
  CHECK(rep.image_size == 7);
  CHECK(rep.main_bound.holds);
  CHECK(rep.main_bound.lhs_q == Rat(Int(7 * 27), Int(27 + 49)));

  // A = F_q minus zero: everything is hit, above q/2
  // (q = 3 is excluded: (q-1)^3 = 8 < 9 = q^2 fails the size gate there)
  for (int q : {5, 7, 11, 13}) {
    PrimeField f(q);
    std::vector<int> all;
    for (int v = 1; v < q; ++v) all.push_back(v);
    auto r = sumproduct_check(f, FieldSubset(f, all));
    CHECK(r.image_size == q);
    CHECK(r.large_case_applies);
    CHECK(r.large_case.holds);
  }
}

TEST_CASE("sum-product randomized trials across primes", "[fieldlab]") {
  Rng rng(kDefaultSeed);
  std::vector<int> primes{11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
                          73, 79, 83, 89, 97, 101};
  int large_cases = 0, medium_cases = 0;
  for (int t = 0; t < 200; ++t) {
    int q = primes[static_cast<size_t>(rng.below(primes.size()))];
    PrimeField f(q);
    int size = 1 + static_cast<int>(rng.below(q - 1));
    auto picks = rng.sample(q - 1, size);
    std::vector<int> elems;
    for (int v : picks) elems.push_back(v + 1);
    auto rep = sumproduct_check(f, FieldSubset(f, elems));
    CHECK(rep.main_bound.holds);
    if (rep.large_case_applies) {
      ++large_cases;
      CHECK(rep.large_case.holds);
    }
    if (rep.medium_case_applies) {
      ++medium_cases;
      CHECK(rep.medium_case.holds);
    }
  }
  CHECK(large_cases > 0);
  CHECK(medium_cases > 0);
}

TEST_CASE("csv emission", "[fieldlab]") {
  PrimeField f7(7);
  FieldSubset a(f7, {1, 2, 3});
  auto rep = sumproduct_check(f7, a);
  CHECK(sumproduct_csv_row(f7, a, rep) == "7,3,7,189/76,343/76");
}
