#pragma once

#include "qra/rational.hpp"
#include "qra/rng.hpp"

#include <vector>

namespace qra {

/// Random rational probability vector: integer masses in [1, 1000] over the
/// whole domain, normalized by their sum.
inline RatVec random_probability(int n, Rng& rng) {
  RatVec x;
  x.num.resize(n);
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    x.num[i] = rng.range(1, 1000);
    total += x.num[i];
  }
  x.den = total;
  x.is_probability = true;
  return x;
}

/// Probability vector concentrated on a subset (uniformly random masses).
inline RatVec random_probability_on(int n, const std::vector<int>& support, Rng& rng) {
  RatVec x;
  x.num.assign(n, 0);
  long long total = 0;
  for (int i : support) {
    x.num[i] = rng.range(1, 1000);
    total += x.num[i];
  }
  x.den = total;
  x.is_probability = true;
  return x;
}

/// Uniform probability on a subset.
inline RatVec uniform_on(int n, const std::vector<int>& support) {
  RatVec x;
  x.num.assign(n, 0);
  for (int i : support) x.num[i] = 1;
  x.den = static_cast<long long>(support.size());
  x.is_probability = true;
  return x;
}

/// Characteristic (0/1) vector of a subset.
inline RatVec indicator(int n, const std::vector<int>& support) {
  RatVec x;
  x.num.assign(n, 0);
  for (int i : support) x.num[i] = 1;
  x.den = 1;
  return x;
}

/// Exact zero-sum vector: raw masses recentered by the mean, scaled by n to
/// stay integral.
inline RatVec random_zero_sum(int n, Rng& rng) {
  std::vector<long long> m(n);
  long long total = 0;
  for (int i = 0; i < n; ++i) {
    m[i] = rng.range(-500, 500);
    total += m[i];
  }
  RatVec f;
  f.num.resize(n);
  for (int i = 0; i < n; ++i) f.num[i] = m[i] * n - total;
  f.den = static_cast<long long>(n) * 1000;
  f.is_zero_sum = true;
  return f;
}

} // namespace qra
