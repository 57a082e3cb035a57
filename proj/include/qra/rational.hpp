#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qra {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Rat make_rat(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rat(Int(num), Int(den));
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

/// Serialized as "p/q" (or "p" when q == 1); lossless decimal-digit form.
inline std::string rat_string(const Rat& r) {
  Int n = boost::multiprecision::numerator(r);
  Int d = boost::multiprecision::denominator(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

namespace detail {
inline long long checked_ll(__int128 v, const char* what) {
  if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
    throw std::overflow_error(std::string("int64 overflow in ") + what);
  return static_cast<long long>(v);
}
} // namespace detail

/// Exact rational vector with one common denominator. Entry i is num[i]/den.
/// Hot numeric loops (convolution, image counting) stay in int64; anything
/// quadratic in the values is promoted to big integers by the callers.
struct RatVec {
  std::vector<long long> num;
  long long den = 1;
  bool is_probability = false;
  bool is_zero_sum = false;

  int size() const { return static_cast<int>(num.size()); }

  Rat at(int i) const { return make_rat(num[i], den); }

  Rat sum() const {
    __int128 s = 0;
    for (long long v : num) s += v;
    return Rat(Int(static_cast<long long>(s)), Int(den));
  }

  /// Exact squared Euclidean norm.
  Rat norm2() const {
    Int s = 0;
    for (long long v : num) s += Int(v) * v;
    return Rat(s, Int(den) * den);
  }

  bool is_zero() const {
    for (long long v : num)
      if (v != 0) return false;
    return true;
  }

  void validate_flags() const {
    if (is_probability) {
      for (long long v : num)
        if (v < 0) throw std::invalid_argument("probability vector with negative entry");
      if (sum() != 1) throw std::invalid_argument("probability vector does not sum to 1");
    }
    if (is_zero_sum && sum() != 0)
      throw std::invalid_argument("zero-sum vector does not sum to 0");
  }
};

/// a - b, exact. Result denominator is den_a * den_b.
inline RatVec subtract(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("subtract: size mismatch");
  RatVec out;
  out.den = detail::checked_ll(static_cast<__int128>(a.den) * b.den, "subtract");
  out.num.resize(a.num.size());
  for (size_t i = 0; i < a.num.size(); ++i)
    out.num[i] = detail::checked_ll(
        static_cast<__int128>(a.num[i]) * b.den - static_cast<__int128>(b.num[i]) * a.den,
        "subtract");
  out.is_zero_sum = a.is_probability && b.is_probability;
  return out;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: size mismatch");
  RatVec out;
  out.den = detail::checked_ll(static_cast<__int128>(a.den) * b.den, "add");
  out.num.resize(a.num.size());
  for (size_t i = 0; i < a.num.size(); ++i)
    out.num[i] = detail::checked_ll(
        static_cast<__int128>(a.num[i]) * b.den + static_cast<__int128>(b.num[i]) * a.den, "add");
  return out;
}

inline RatVec scale(const RatVec& a, long long knum, long long kden) {
  RatVec out;
  out.den = detail::checked_ll(static_cast<__int128>(a.den) * kden, "scale");
  out.num.resize(a.num.size());
  for (size_t i = 0; i < a.num.size(); ++i)
    out.num[i] = detail::checked_ll(static_cast<__int128>(a.num[i]) * knum, "scale");
  return out;
}

inline RatVec uniform_vec(int n) {
  RatVec u;
  u.num.assign(n, 1);
  u.den = n;
  u.is_probability = true;
  return u;
}

inline RatVec point_mass(int n, int at) {
  RatVec x;
  x.num.assign(n, 0);
  x.num[at] = 1;
  x.den = 1;
  x.is_probability = true;
  return x;
}

inline std::vector<double> to_doubles(const RatVec& v) {
  std::vector<double> out(v.num.size());
  for (size_t i = 0; i < v.num.size(); ++i)
    out[i] = static_cast<double>(v.num[i]) / static_cast<double>(v.den);
  return out;
}

} // namespace qra
