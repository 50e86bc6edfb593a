#include "commsplit/modp.hpp"

#include <algorithm>

#include "commsplit/errors.hpp"
#include "commsplit/numeric.hpp"

namespace commsplit {

namespace {

void require_prime(long long p) {
  if (!is_prime(p))
    throw DomainError(std::to_string(p) + " is not prime");
}

void require_even_ge4(int n) {
  if (n % 2 != 0)
    throw UnsupportedError("odd arity: the spectral-sequence differentials "
                           "are not determined here");
  if (n == 2)
    throw UnsupportedError("arity 2 has a nontrivial Euler class; the series "
                           "is not assembled by this route");
  if (n < 2) throw DomainError("arity must be at least 2");
}

Polynomial odd_degree_product(long long p) {
  // prod_{k=1}^{p-2} (1 + t^{2k-1}); empty product for p = 2.
  Polynomial prod = Polynomial::one();
  for (long long k = 1; k <= p - 2; ++k)
    prod = prod * (Polynomial::one() + Polynomial::monomial(static_cast<int>(2 * k - 1)));
  return prod;
}

}  // namespace

Polynomial flag_unordered_series(long long p) {
  require_prime(p);
  Polynomial head = Polynomial::monomial(static_cast<int>(2 * p - 3)) +
                    Polynomial::monomial(static_cast<int>(2 * p - 2));
  return Polynomial::one() + head * odd_degree_product(p);
}

std::vector<int> guerra_jana_degrees(long long p) {
  require_prime(p);
  if (p == 2)
    throw UnsupportedError("the alpha/gamma basis is stated for odd primes");
  if (p > 23)
    throw CapacityError("degree multiset has 2^{p-1} entries; p > 23 refused");
  std::vector<int> degrees{0};
  const int base_alpha = static_cast<int>(2 * p - 3);
  const int subsets = static_cast<int>(p) - 2;
  for (unsigned mask = 0; mask < (1u << subsets); ++mask) {
    int shift = 0;
    for (int i = 0; i < subsets; ++i)
      if (mask >> i & 1u) shift += 2 * (i + 1) - 1;
    degrees.push_back(base_alpha + shift);
    degrees.push_back(base_alpha + 1 + shift);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

bool euler_class_vanishes(int n) {
  if (n < 2 || n % 2 != 0)
    throw DomainError("Euler class statement covers even arity >= 2 only");
  return n > 2;
}

Polynomial cnup_modp_gysin(long long p, int n) {
  require_prime(p);
  require_even_ge4(n);
  Polynomial flag = flag_unordered_series(p);
  Polynomial reduced_flag = flag - Polynomial::one();
  return Polynomial::one() + reduced_flag.shifted(n + 1) +
         flag.shifted(static_cast<int>(n * p));
}

Polynomial cnup_modp_closed(long long p, int n) {
  require_prime(p);
  require_even_ge4(n);
  Polynomial head = Polynomial::monomial(static_cast<int>(2 * p - 3)) +
                    Polynomial::monomial(static_cast<int>(2 * p - 2));
  Polynomial shifts = Polynomial::monomial(n + 1) +
                      Polynomial::monomial(static_cast<int>(n * p));
  return Polynomial::one() + Polynomial::monomial(static_cast<int>(n * p)) +
         shifts * head * odd_degree_product(p);
}

int h2p_c2_rank(long long p) {
  require_prime(p);
  return 1;
}

}  // namespace commsplit
