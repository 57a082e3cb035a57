#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace qra {

/// Deterministic splitmix64 stream. All randomized machinery in the library
/// draws from this generator so that identical seeds reproduce identical
/// runs on any platform. Default seed is 0x5EED.
class Rng {
public:
  explicit Rng(std::uint64_t seed = 0x5EED) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // rejection sampling keeps the draw unbiased
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

  /// Uniform integer in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in (0,1).
  double real() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  /// k distinct values from {0,...,n-1}, ascending order.
  std::vector<int> sample(int n, int k) {
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
      int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  }

  /// Derive an independent stream: used for per-trial seeds.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    Rng r(a ^ (b * 0xD1B54A32D192ED03ull) ^ 0x8CB92BA72F3D8DD7ull);
    return r.next();
  }

private:
  std::uint64_t state_;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;

} // namespace qra
