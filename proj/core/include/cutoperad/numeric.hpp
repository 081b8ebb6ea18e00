#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cutoperad {

/// Arbitrary-precision integer used for all exact counting.
using Int = boost::multiprecision::cpp_int;

/// Exact rational; coordinates, series coefficients and chain
/// coefficients never touch floating point.
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

inline std::string ratToString(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

/// Parses "p" or "p/q"; throws on malformed input.
inline Rat ratFromString(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace cutoperad
