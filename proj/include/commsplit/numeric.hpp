#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace commsplit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int k) {
  Integer r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Deterministic trial division; ample for the word-sized inputs seen here.
inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<int> primes_up_to(int bound) {
  std::vector<int> out;
  for (int p = 2; p <= bound; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

inline bool is_integral(const Rational& r) { return denominator(r) == 1; }

}  // namespace commsplit
