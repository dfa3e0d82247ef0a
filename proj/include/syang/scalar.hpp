#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace syang {

// Exact rational scalar. cpp_rational keeps lowest terms with positive
// denominator, so equal values always compare equal structurally.
using Scalar = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Scalar make_scalar(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("make_scalar: zero denominator");
  return Scalar(Integer(num), Integer(den));
}

// Renders as "p" or "p/q" with q > 1.
inline std::string scalar_str(const Scalar& s) {
  if (denominator(s) == 1) return numerator(s).str();
  return numerator(s).str() + "/" + denominator(s).str();
}

inline bool is_integer(const Scalar& s) { return denominator(s) == 1; }

// Exact binomial coefficient C(n, k) for n, k >= 0.
inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer acc = 1;
  for (int t = 0; t < k; ++t) {
    acc *= (n - t);
    acc /= (t + 1);
  }
  return acc;
}

inline Scalar pow_scalar(const Scalar& base, int e) {
  if (e < 0) throw std::invalid_argument("pow_scalar: negative exponent");
  Scalar acc = 1, b = base;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace syang
