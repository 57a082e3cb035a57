#pragma once

#include "qra/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qra {

inline constexpr int kMaxOmega = 2000;
inline constexpr long long kMaxCosetIndex = 2000;
inline constexpr long long kMaxSubsetCount = 1'000'000;

/// A transitive left action of a group on Omega = {0,...,omega-1}.
/// Explicit-group actions carry the full apply table; generator-only actions
/// (large matrix groups) carry images of the generators only.
class TransitiveAction {
public:
  GroupPtr group;                             // null for generator-only actions
  int omega = 0;
  std::vector<std::vector<int>> gen_images;   // gen_images[k][x] = g_k(x)
  int base_point = 0;
  std::vector<int> stabilizer;                // sorted element ids, explicit only
  std::string name;

  bool has_explicit_group() const { return group != nullptr; }

  int apply(int element_id, int point) const { return table_[element_id][point]; }
  const std::vector<int>& image_row(int element_id) const { return table_[element_id]; }

  /// Left transversal: reps[w] maps the base point to w.
  const std::vector<int>& transversal() const { return transversal_; }
  /// point_of[g] is the coset index g(base), i.e. gH as a point of Omega.
  const std::vector<int>& point_of_element() const { return point_of_; }

  void build_tables() {
    if (!group) throw std::logic_error("build_tables: generator-only action");
    const ExplicitGroup& g = *group;
    table_.assign(g.order(), std::vector<int>());
    // identity row, then BFS rows via generator images; each element is
    // reached as (previous element) * generator during closure, but here we
    // recompute directly from the permutations for independence from
    // discovery order.
    for (int e = 0; e < g.order(); ++e) {
      std::vector<int>& row = table_[e];
      row.resize(omega);
      fill_row(e, row);
    }
    point_of_.resize(g.order());
    for (int e = 0; e < g.order(); ++e) point_of_[e] = table_[e][base_point];
    transversal_.assign(omega, -1);
    for (int e = 0; e < g.order(); ++e) {
      int w = point_of_[e];
      if (transversal_[w] < 0) transversal_[w] = e;
    }
    stabilizer.clear();
    for (int e = 0; e < g.order(); ++e)
      if (point_of_[e] == base_point) stabilizer.push_back(e);
    validate();
  }

  /// Subclasses-by-convention: how to compute the image row of an element.
  std::function<void(int, std::vector<int>&)> row_filler;

private:
  void fill_row(int e, std::vector<int>& row) const {
    if (!row_filler) throw std::logic_error("action missing row filler");
    row_filler(e, row);
  }

  void validate() const {
    const ExplicitGroup& g = *group;
    // action axioms on sampled triples plus transitivity
    for (int x = 0; x < omega; ++x)
      if (table_[0][x] != x) throw std::logic_error("action: identity does not fix points");
    Rng rng(0xAC710Full);
    int checks = std::min(1000, g.order() * 4);
    for (int t = 0; t < checks; ++t) {
      int a = static_cast<int>(rng.below(g.order()));
      int b = static_cast<int>(rng.below(g.order()));
      int x = static_cast<int>(rng.below(omega));
      if (table_[g.mul(a, b)][x] != table_[a][table_[b][x]])
        throw std::logic_error("action: composition axiom failed");
    }
    for (int w = 0; w < omega; ++w)
      if (transversal_[w] < 0) throw std::logic_error("action: not transitive");
  }

  std::vector<std::vector<int>> table_;
  std::vector<int> transversal_;
  std::vector<int> point_of_;
};

/// Natural action of a permutation group on its ground set.
inline TransitiveAction natural_action(GroupPtr group) {
  TransitiveAction a;
  a.group = group;
  a.omega = group->degree();
  a.row_filler = [g = group](int e, std::vector<int>& row) {
    const Perm& p = g->element(e);
    for (int x = 0; x < static_cast<int>(p.size()); ++x) row[x] = p[x];
  };
  for (int gid : group->generator_ids()) {
    a.gen_images.push_back(group->element(gid));
  }
  a.build_tables();
  return a;
}

/// Action on left cosets gH. Cosets are indexed in breadth-first discovery
/// order from the base coset H; apply(g, xH) = (g x)H.
inline TransitiveAction coset_action(GroupPtr group, const std::vector<int>& subgroup) {
  const ExplicitGroup& g = *group;
  std::vector<int> h = subgroup;
  if (h.empty()) h.push_back(0);
  std::sort(h.begin(), h.end());
  if (!g.is_subgroup(h)) throw std::invalid_argument("coset_action: subgroup not closed");
  long long index = g.order() / static_cast<long long>(h.size());
  if (index > kMaxCosetIndex)
    throw std::runtime_error("coset_action: index cap " + std::to_string(kMaxCosetIndex) +
                             " exceeded");
  // coset id per element, BFS over generators from the base coset
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> reps;
  auto claim = [&](int rep) {
    int id = static_cast<int>(reps.size());
    reps.push_back(rep);
    for (int x : h) coset_of[g.mul(rep, x)] = id;
    return id;
  };
  claim(0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int gid : g.generator_ids()) {
      int image_rep = g.mul(gid, reps[c]);
      if (coset_of[image_rep] < 0) queue.push_back(claim(image_rep));
    }
  }
  for (int e = 0; e < g.order(); ++e)
    if (coset_of[e] < 0) throw std::logic_error("coset_action: cosets do not cover group");

  TransitiveAction a;
  a.group = group;
  a.omega = static_cast<int>(reps.size());
  a.base_point = 0;
  a.row_filler = [grp = group, reps, coset_of](int e, std::vector<int>& row) {
    for (size_t c = 0; c < reps.size(); ++c) row[c] = coset_of[grp->mul(e, reps[c])];
  };
  for (int gid : group->generator_ids()) {
    std::vector<int> img(reps.size());
    for (size_t c = 0; c < reps.size(); ++c) img[c] = coset_of[g.mul(gid, reps[c])];
    a.gen_images.push_back(std::move(img));
  }
  a.build_tables();
  if (a.stabilizer != h) throw std::logic_error("coset_action: stabilizer mismatch");
  return a;
}

/// Regular action as the degenerate coset action on the trivial subgroup.
inline TransitiveAction regular_action(GroupPtr group) { return coset_action(group, {0}); }

/// Conjugation action of G on a conjugacy class, with the class members as
/// Omega in ascending element order. Isomorphic to the coset action on the
/// centralizer of the representative.
inline TransitiveAction conjugation_action(GroupPtr group, const std::vector<int>& class_members) {
  const ExplicitGroup& g = *group;
  if (class_members.empty()) throw std::invalid_argument("conjugation_action: empty class");
  if (static_cast<long long>(g.order()) * class_members.size() > 20'000'000)
    throw std::runtime_error("conjugation_action: table too large");
  std::vector<int> pos(g.order(), -1);
  for (size_t i = 0; i < class_members.size(); ++i) pos[class_members[i]] = static_cast<int>(i);
  TransitiveAction a;
  a.group = group;
  a.omega = static_cast<int>(class_members.size());
  a.base_point = 0;
  a.row_filler = [grp = group, class_members, pos](int e, std::vector<int>& row) {
    for (size_t i = 0; i < class_members.size(); ++i) {
      int image = grp->conjugate(e, class_members[i]);
      if (pos[image] < 0) throw std::logic_error("conjugation_action: class not invariant");
      row[i] = pos[image];
    }
  };
  for (int gid : g.generator_ids()) {
    std::vector<int> img(class_members.size());
    for (size_t i = 0; i < class_members.size(); ++i) img[i] = pos[g.conjugate(gid, class_members[i])];
    a.gen_images.push_back(std::move(img));
  }
  a.build_tables();
  return a;
}

/// SL_n(2) acting on the 2^n - 1 nonzero vectors. For n <= 4 the group is
/// enumerated; larger n get a generator-only action.
inline TransitiveAction sl2_vector_action(int n) {
  if (n < 2 || n > 10) throw std::invalid_argument("sl2_vector_action: n in 2..10");
  std::vector<GF2Matrix> gens = sln2_generators(n);
  TransitiveAction a;
  a.omega = (1 << n) - 1;
  for (const GF2Matrix& m : gens) a.gen_images.push_back(gf2_vector_permutation(m));
  if (n <= 4) {
    auto grp = std::make_shared<ExplicitGroup>(ExplicitGroup::generate_gf2(gens));
    a.group = grp;
    a.row_filler = [grp](int e, std::vector<int>& row) {
      const Perm& p = grp->element(e);
      for (int x = 0; x < static_cast<int>(p.size()); ++x) row[x] = p[x];
    };
    a.build_tables();
  }
  return a;
}

/// Orbit partition of Omega x Omega under the diagonal action, computed by
/// BFS over generator images only. Orbital 0 need not be the diagonal; ids
/// follow row-major discovery of representatives.
struct Orbitals {
  int omega = 0;
  int count = 0;
  std::vector<int> id;          // omega*omega, row-major
  std::vector<int> transpose;   // orbital of the swapped pair
  std::vector<int> size;        // pairs per orbital
  std::vector<std::pair<int, int>> representative;

  int at(int x, int y) const { return id[static_cast<size_t>(x) * omega + y]; }
};

inline Orbitals orbit_pairs(const TransitiveAction& action) {
  int n = action.omega;
  if (n > kMaxOmega) throw std::runtime_error("orbit_pairs: omega cap exceeded");
  Orbitals orb;
  orb.omega = n;
  orb.id.assign(static_cast<size_t>(n) * n, -1);
  std::deque<std::pair<int, int>> queue;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (orb.id[static_cast<size_t>(x) * n + y] >= 0) continue;
      int oid = orb.count++;
      orb.representative.emplace_back(x, y);
      orb.size.push_back(0);
      orb.id[static_cast<size_t>(x) * n + y] = oid;
      queue.emplace_back(x, y);
      while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        orb.size[oid]++;
        for (const auto& img : action.gen_images) {
          int a2 = img[a], b2 = img[b];
          int& slot = orb.id[static_cast<size_t>(a2) * n + b2];
          if (slot < 0) {
            slot = oid;
            queue.emplace_back(a2, b2);
          }
        }
      }
    }
  orb.transpose.resize(orb.count);
  for (int o = 0; o < orb.count; ++o) {
    auto [x, y] = orb.representative[o];
    orb.transpose[o] = orb.at(y, x);
  }
  long long total = 0;
  for (int s : orb.size) total += s;
  if (total != static_cast<long long>(n) * n)
    throw std::logic_error("orbit_pairs: sizes do not partition Omega^2");
  return orb;
}

/// Number of orbits of <generators> on r-element subsets of {0,...,n-1}.
inline long long action_on_r_subsets(int n, const std::vector<Perm>& generators, int r) {
  if (r < 0 || 2 * r > n) throw std::invalid_argument("action_on_r_subsets: need 0 <= r <= n/2");
  if (r == 0) return 1;
  // binomial cap
  long long binom = 1;
  for (int i = 0; i < r; ++i) {
    binom = binom * (n - i) / (i + 1);
    if (binom > kMaxSubsetCount)
      throw std::runtime_error("action_on_r_subsets: binomial cap exceeded");
  }
  // colex rank over all r-subsets
  std::vector<std::vector<long long>> choose(n + 1, std::vector<long long>(r + 1, 0));
  for (int i = 0; i <= n; ++i) {
    choose[i][0] = 1;
    for (int j = 1; j <= std::min(i, r); ++j)
      choose[i][j] = choose[i - 1][j - 1] + (i - 1 >= j ? choose[i - 1][j] : 0);
  }
  auto rank_of = [&](const std::vector<int>& subset) {
    long long rank = 0;
    for (int k = 0; k < r; ++k) rank += choose[subset[k]][k + 1];
    return rank;
  };
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  std::vector<int> owner(binom, -1);
  long long orbits = 0;
  // enumerate subsets in lex order, BFS each unseen orbit
  std::vector<int> tmp(r);
  auto apply_gen = [&](const Perm& g, const std::vector<int>& s) {
    for (int i = 0; i < r; ++i) tmp[i] = g[s[i]];
    std::sort(tmp.begin(), tmp.end());
    return tmp;
  };
  std::deque<std::vector<int>> queue;
  while (true) {
    long long rank = rank_of(cur);
    if (owner[rank] < 0) {
      owner[rank] = static_cast<int>(orbits);
      ++orbits;
      queue.push_back(cur);
      while (!queue.empty()) {
        std::vector<int> s = queue.front();
        queue.pop_front();
        for (const Perm& g : generators) {
          std::vector<int> t = apply_gen(g, s);
          long long tr = rank_of(t);
          if (owner[tr] < 0) {
            owner[tr] = owner[rank];
            queue.push_back(t);
          }
        }
      }
    }
    // next r-subset in lex order
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return orbits;
}

} // namespace qra
