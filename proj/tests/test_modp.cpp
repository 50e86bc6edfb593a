#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commsplit/errors.hpp"
#include "commsplit/modp.hpp"
#include "commsplit/series.hpp"

using namespace commsplit;

namespace {

Polynomial poly(std::initializer_list<long long> coeffs) {
  std::vector<Rational> c;
  for (long long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("unordered flag series") {
  CHECK(flag_unordered_series(2) == poly({1, 1, 1}));
  CHECK(flag_unordered_series(3) == poly({1, 0, 0, 1, 2, 1}));
  CHECK(flag_unordered_series(5).sum_of_coefficients() == 17);  // 1 + 2*2^3
  for (long long p : {2, 3, 5, 7, 11, 13})
    CHECK(flag_unordered_series(p).sum_of_coefficients() ==
          Rational(1 + (Integer(1) << (p - 1))));
  CHECK_THROWS_AS(flag_unordered_series(4), DomainError);
  CHECK_THROWS_AS(flag_unordered_series(1), DomainError);
}

TEST_CASE("generator degrees at p=3") {
  auto degrees = guerra_jana_degrees(3);
  CHECK(degrees == std::vector<int>({0, 3, 4, 4, 5}));
}

TEST_CASE("generator degrees at p=5") {
  auto degrees = guerra_jana_degrees(5);
  CHECK(degrees.size() == 1 + 8 + 8);
  // S = empty gives the minimal alpha degree 2p-3 = 7.
  CHECK(degrees[1] == 7);
}

TEST_CASE("degree multiset regenerates the series for odd p <= 13") {
  for (long long p : {3, 5, 7, 11, 13}) {
    Polynomial regenerated;
    for (int d : guerra_jana_degrees(p)) regenerated += Polynomial::monomial(d);
    CHECK(regenerated == flag_unordered_series(p));
  }
  CHECK_THROWS_AS(guerra_jana_degrees(2), UnsupportedError);
  CHECK_THROWS_AS(guerra_jana_degrees(29), CapacityError);
}

TEST_CASE("Euler class vanishing") {
  CHECK_FALSE(euler_class_vanishes(2));
  CHECK(euler_class_vanishes(4));
  CHECK(euler_class_vanishes(100));
  CHECK_THROWS_AS(euler_class_vanishes(3), DomainError);
  CHECK_THROWS_AS(euler_class_vanishes(0), DomainError);
}

TEST_CASE("mod-p series of the compactified commuting variety") {
  Polynomial expected_p2n4 = poly({1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
  CHECK(cnup_modp_gysin(2, 4) == expected_p2n4);
  CHECK(cnup_modp_closed(2, 4) == expected_p2n4);
  // p=3, n=4: 1 + t^8 + 2t^9 + t^10 + t^12 + t^15 + 2t^16 + t^17
  Polynomial expected_p3n4 =
      poly({1, 0, 0, 0, 0, 0, 0, 0, 1, 2, 1, 0, 1, 0, 0, 1, 2, 1});
  CHECK(cnup_modp_closed(3, 4) == expected_p3n4);
  CHECK(cnup_modp_gysin(3, 4) == expected_p3n4);
}

TEST_CASE("the two assemblies agree across the stated grid") {
  for (long long p : {2, 3, 5, 7})
    for (int n : {4, 6, 8}) {
      Polynomial closed = cnup_modp_closed(p, n);
      CHECK(closed == cnup_modp_gysin(p, n));
      CHECK(closed.coeff(0) == 1);
      // Top degree is np + 2p - 2 + sum_{k=1}^{p-2} (2k - 1).
      int top = static_cast<int>(n * p + 2 * p - 2 + (p - 2) * (p - 2));
      CHECK(closed.degree() == top);
    }
}

TEST_CASE("domain guards") {
  CHECK_THROWS_AS(cnup_modp_closed(6, 4), DomainError);
  CHECK_THROWS_AS(cnup_modp_closed(3, 5), UnsupportedError);
  CHECK_THROWS_AS(cnup_modp_closed(3, 2), UnsupportedError);
  CHECK_THROWS_AS(cnup_modp_gysin(3, 3), UnsupportedError);
}

TEST_CASE("rational series is a coefficientwise lower bound") {
  for (long long p : {2, 3, 5})
    for (int n : {4, 6}) {
      Polynomial rational = Polynomial::one() +
                            Polynomial::monomial(static_cast<int>(n * p));
      CHECK(rational.dominated_by(cnup_modp_closed(p, n)));
      // The rational statement: the compactified variety is a sphere of
      // dimension np for even n.
      CHECK(sphere_dim(GroupKind::Unitary, static_cast<int>(p), n) ==
            static_cast<int>(n * p));
    }
}

TEST_CASE("rank of H^{2p} for commuting pairs") {
  CHECK(h2p_c2_rank(2) == 1);
  CHECK(h2p_c2_rank(3) == 1);
  CHECK(h2p_c2_rank(7) == 1);
  CHECK_THROWS_AS(h2p_c2_rank(9), DomainError);
}
