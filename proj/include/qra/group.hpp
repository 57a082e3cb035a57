#pragma once

#include "qra/gf2.hpp"
#include "qra/permutation.hpp"
#include "qra/rng.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qra {

inline constexpr long long kMaxGroupOrder = 200'000;

/// A finite group materialized as permutations in breadth-first discovery
/// order with the identity first. Elements are referred to by dense index.
/// GF(2) matrix groups are stored through their faithful action on nonzero
/// vectors, so every explicit group is a permutation group internally.
class ExplicitGroup {
public:
  static ExplicitGroup generate(const std::vector<Perm>& generators) {
    if (generators.empty()) throw std::invalid_argument("generate: no generators");
    size_t degree = generators[0].size();
    for (const Perm& g : generators) {
      if (g.size() != degree) throw std::invalid_argument("generate: inconsistent degrees");
      if (!perm_is_valid(g)) throw std::invalid_argument("generate: not a permutation");
    }
    ExplicitGroup grp;
    grp.degree_ = static_cast<int>(degree);
    Perm id = perm_identity(static_cast<int>(degree));
    grp.push_element(id);
    for (const Perm& g : generators) {
      int idx = grp.lookup(g);
      if (idx < 0) idx = grp.push_element(g);
      grp.generator_ids_.push_back(idx);
    }
    std::deque<int> queue;
    for (int i = 0; i < static_cast<int>(grp.elements_.size()); ++i) queue.push_back(i);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int gid : grp.generator_ids_) {
        Perm prod = perm_compose(grp.elements_[x], grp.elements_[gid]);
        if (grp.lookup(prod) < 0) {
          if (static_cast<long long>(grp.elements_.size()) >= kMaxGroupOrder)
            throw std::runtime_error("generate: group order cap " +
                                     std::to_string(kMaxGroupOrder) + " exceeded");
          queue.push_back(grp.push_element(prod));
        }
      }
    }
    grp.finish();
    return grp;
  }

  static ExplicitGroup generate_gf2(const std::vector<GF2Matrix>& generators) {
    if (generators.empty()) throw std::invalid_argument("generate_gf2: no generators");
    int n = generators[0].n;
    std::vector<Perm> perms;
    for (const GF2Matrix& m : generators) {
      if (m.n != n) throw std::invalid_argument("generate_gf2: inconsistent dimensions");
      if (!m.invertible()) throw std::invalid_argument("generate_gf2: singular matrix");
      perms.push_back(gf2_vector_permutation(m));
    }
    ExplicitGroup grp = generate(perms);
    grp.gf2_dimension_ = n;
    return grp;
  }

  int order() const { return static_cast<int>(elements_.size()); }
  int degree() const { return degree_; }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<int>& generator_ids() const { return generator_ids_; }
  int gf2_dimension() const { return gf2_dimension_; }

  int mul(int a, int b) const {
    thread_local Perm scratch;
    int deg = degree_;
    const Perm& pa = elements_[a];
    const Perm& pb = elements_[b];
    scratch.resize(deg);
    for (int i = 0; i < deg; ++i) scratch[i] = pa[pb[i]];
    int idx = lookup(scratch);
    if (idx < 0) throw std::logic_error("mul: product escaped group");
    return idx;
  }

  int inv(int a) const { return inverse_[a]; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }

  int index_of(const Perm& p) const {
    int idx = lookup(p);
    if (idx < 0) throw std::invalid_argument("index_of: element not in group");
    return idx;
  }

  bool contains(const Perm& p) const { return lookup(p) >= 0; }

  int element_order(int a) const { return perm_order(elements_[a]); }

  /// Closure of a subset under multiplication; used both to validate
  /// subgroups and to generate them from frames.
  std::vector<int> subgroup_closure(std::vector<int> seed) const {
    std::vector<char> in(order(), 0);
    std::deque<int> queue;
    auto push = [&](int x) {
      if (!in[x]) {
        in[x] = 1;
        queue.push_back(x);
      }
    };
    push(0);
    for (int s : seed) push(s);
    std::vector<int> members{};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      members.push_back(x);
      push(inv(x));
      for (int y : members) {
        push(mul(x, y));
        push(mul(y, x));
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  bool is_subgroup(const std::vector<int>& members) const {
    std::vector<char> in(order(), 0);
    for (int m : members) in[m] = 1;
    if (!in[0]) return false;
    for (int a : members) {
      if (!in[inv(a)]) return false;
      for (int b : members)
        if (!in[mul(a, b)]) return false;
    }
    return true;
  }

  std::vector<int> centralizer(int g) const {
    std::vector<int> out;
    for (int h = 0; h < order(); ++h)
      if (mul(h, g) == mul(g, h)) out.push_back(h);
    return out;
  }

  std::vector<int> normalizer(const std::vector<int>& subgroup) const {
    std::vector<char> in(order(), 0);
    for (int m : subgroup) in[m] = 1;
    std::vector<int> out;
    for (int g = 0; g < order(); ++g) {
      bool ok = true;
      for (int h : subgroup)
        if (!in[conjugate(g, h)]) {
          ok = false;
          break;
        }
      if (ok) out.push_back(g);
    }
    return out;
  }

  /// Conjugacy class of g as a sorted id list (orbit under generator
  /// conjugation; no full multiplication table required).
  std::vector<int> conjugacy_class_of(int g) const {
    std::vector<char> seen(order(), 0);
    std::deque<int> queue;
    seen[g] = 1;
    queue.push_back(g);
    std::vector<int> members;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (int gid : generator_ids_) {
        int y = conjugate(gid, x);
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  bool is_perfect() const {
    // commutator subgroup via closure of generator commutators' class orbits
    std::vector<int> seed;
    for (int a : generator_ids_)
      for (int b : generator_ids_)
        seed.push_back(mul(mul(a, b), inv(mul(b, a))));
    // the commutator subgroup is the normal closure of these
    std::vector<char> in(order(), 0);
    std::deque<int> queue;
    auto push = [&](int x) {
      if (!in[x]) {
        in[x] = 1;
        queue.push_back(x);
      }
    };
    push(0);
    for (int s : seed) push(s);
    std::vector<int> members;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      members.push_back(x);
      push(inv(x));
      for (int gid : generator_ids_) push(conjugate(gid, x));
      for (int y : members) push(mul(x, y));
    }
    return static_cast<int>(members.size()) == order();
  }

  /// All subgroups of the subgroup generated by `frame`, found by repeatedly
  /// extending known subgroups with one more element. Intended for small
  /// subgroups; guards with a count cap.
  std::vector<std::vector<int>> subgroups_of(const std::vector<int>& frame,
                                             size_t cap = 100000) const {
    std::vector<int> ambient = subgroup_closure(frame);
    std::vector<std::vector<int>> found{{0}};
    std::vector<std::vector<int>> frontier{{0}};
    auto known = [&](const std::vector<int>& s) {
      for (const auto& t : found)
        if (t == s) return true;
      return false;
    };
    while (!frontier.empty()) {
      std::vector<std::vector<int>> next;
      for (const auto& k : frontier) {
        for (int h : ambient) {
          if (std::binary_search(k.begin(), k.end(), h)) continue;
          std::vector<int> seed = k;
          seed.push_back(h);
          std::vector<int> sub = subgroup_closure(seed);
          if (!known(sub)) {
            found.push_back(sub);
            next.push_back(sub);
            if (found.size() > cap) throw std::runtime_error("subgroups_of: cap exceeded");
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    return found;
  }

private:
  struct KeyHash {
    using is_transparent = void;
    size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };
  struct KeyEq {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const { return a == b; }
  };

  int push_element(const Perm& p) {
    int idx = static_cast<int>(elements_.size());
    elements_.push_back(p);
    index_.emplace(key_of(p), idx);
    return idx;
  }

  int lookup(const Perm& p) const {
    thread_local std::vector<char> key;
    key.resize(p.size() * 2);
    fill_key(p, key.data());
    auto it = index_.find(std::string_view(key.data(), key.size()));
    return it == index_.end() ? -1 : it->second;
  }

  static void fill_key(const Perm& p, char* out) {
    for (size_t i = 0; i < p.size(); ++i) {
      out[2 * i] = static_cast<char>(p[i] & 0xff);
      out[2 * i + 1] = static_cast<char>((p[i] >> 8) & 0xff);
    }
  }

  static std::string key_of(const Perm& p) {
    std::string k;
    k.resize(p.size() * 2);
    fill_key(p, k.data());
    return k;
  }

  void finish() {
    inverse_.resize(elements_.size());
    for (size_t i = 0; i < elements_.size(); ++i)
      inverse_[i] = lookup(perm_inverse(elements_[i]));
  }

  int degree_ = 0;
  int gf2_dimension_ = 0; // nonzero when built from GF(2) matrices
  std::vector<Perm> elements_;
  std::vector<int> generator_ids_;
  std::vector<int> inverse_;
  std::unordered_map<std::string, int, KeyHash, KeyEq> index_;
};

using GroupPtr = std::shared_ptr<const ExplicitGroup>;

struct ConjugacyClassData {
  int representative = 0;
  std::vector<int> members;     // sorted element ids
  std::vector<int> centralizer; // sorted element ids
};

inline std::vector<ConjugacyClassData> conjugacy_classes(const ExplicitGroup& g) {
  std::vector<char> assigned(g.order(), 0);
  std::vector<ConjugacyClassData> out;
  for (int e = 0; e < g.order(); ++e) {
    if (assigned[e]) continue;
    ConjugacyClassData cls;
    cls.representative = e;
    cls.members = g.conjugacy_class_of(e);
    for (int m : cls.members) assigned[m] = 1;
    cls.centralizer = g.centralizer(e);
    if (static_cast<long long>(cls.members.size()) *
            static_cast<long long>(cls.centralizer.size()) !=
        g.order())
      throw std::logic_error("conjugacy_classes: class/centralizer size identity failed");
    out.push_back(std::move(cls));
  }
  return out;
}

} // namespace qra
