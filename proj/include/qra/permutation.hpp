#pragma once

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qra {

/// A permutation of {0,...,n-1} stored as its image array: p[i] is the image
/// of point i. Composition is function composition, (a*b)(i) = a(b(i)), which
/// matches the left-action convention used throughout.
using Perm = std::vector<int>;

inline Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool perm_is_valid(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return !p.empty();
}

inline Perm perm_compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: degree mismatch");
  Perm c(a.size());
  for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm perm_inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

inline bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline bool perm_is_even(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int parity = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity == 0;
}

inline int perm_order(const Perm& p) {
  Perm q = p;
  int k = 1;
  while (!perm_is_identity(q)) {
    q = perm_compose(q, p);
    ++k;
    if (k > 1'000'000) throw std::runtime_error("perm_order: runaway");
  }
  return k;
}

/// Parses disjoint cycle notation with 1-based points, e.g. "(1 2)(3 4 5)".
/// Commas are accepted as separators. The empty string and "()" denote the
/// identity. Points absent from the text are fixed.
inline Perm parse_permutation(const std::string& text, int degree) {
  if (degree < 1) throw std::invalid_argument("parse_permutation: degree must be >= 1");
  Perm p = perm_identity(degree);
  std::vector<char> used(degree, 0);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("parse_permutation: expected '(' at position " +
                                  std::to_string(i));
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse_permutation: expected digit at position " +
                                    std::to_string(i));
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw std::invalid_argument("parse_permutation: point " + std::to_string(v) +
                                    " outside 1.." + std::to_string(degree));
      if (used[v - 1])
        throw std::invalid_argument("parse_permutation: repeated point " + std::to_string(v));
      used[v - 1] = 1;
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (i >= text.size()) throw std::invalid_argument("parse_permutation: unterminated cycle");
    ++i; // ')'
    for (size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

inline std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    out += '(';
    bool first = true;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

} // namespace qra
