#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "commsplit/errors.hpp"
#include "commsplit/oracles.hpp"
#include "commsplit/series.hpp"

using namespace commsplit;

namespace {

Polynomial poly(std::initializer_list<long long> coeffs) {
  std::vector<Rational> c;
  for (long long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

IndexedPartition part(int n, std::vector<int> parts) {
  return IndexedPartition(n, std::move(parts));
}

}  // namespace

TEST_CASE("sphere dimensions") {
  CHECK(sphere_dim(GroupKind::Unitary, 2, 2) == 4);
  CHECK(sphere_dim(GroupKind::Unitary, 5, 1) == 25);
  CHECK(sphere_dim(GroupKind::Symplectic, 1, 3) == 5);
  CHECK(sphere_dim(GroupKind::Unitary, 0, 3) == 0);
  CHECK(sphere_dim(GroupKind::Unitary, 3, 0) == 0);
  CHECK(sphere_dim(GroupKind::Symplectic, 2, 2) == 4);
  CHECK(sphere_dim(GroupKind::Unitary, 3, 3) == 15);
}

TEST_CASE("flag Poincare polynomials") {
  CHECK(flag_poincare(GroupFamily::unitary(2), part(1, {1, 1})) == poly({1, 0, 1}));
  CHECK(flag_poincare(GroupFamily::unitary(3), part(1, {1, 2})) ==
        poly({1, 0, 1, 0, 1}));
  CHECK(flag_poincare(GroupFamily::unitary(3), part(1, {0, 3})) ==
        Polynomial::one());
  CHECK(flag_poincare(GroupFamily::symplectic(2), part(1, {1, 1})) ==
        poly({1, 0, 0, 0, 1}));
  CHECK_THROWS_AS(
      flag_poincare(GroupFamily::orthogonal_even(2), part(1, {1, 1})),
      UnsupportedError);
  CHECK_THROWS_AS(flag_poincare(GroupFamily::unitary(3), part(1, {1, 1})),
                  DimensionError);
  // Non-negative with constant term 1 across a range.
  for (const auto& lambda : enumerate_partitions(2, 4)) {
    Polynomial flag = flag_poincare(GroupFamily::unitary(4), lambda);
    CHECK(flag.coeff(0) == 1);
    CHECK(flag.has_nonnegative_coefficients());
  }
}

TEST_CASE("closed summand model reproduces the rank-2 table") {
  GroupFamily u2 = GroupFamily::unitary(2);
  CHECK(summand_series_closed(u2, part(2, {1, 0, 0, 1})) == poly({0, 0, 1, 0, 1}));
  CHECK(summand_series_closed(u2, part(2, {2, 0, 0, 0})) == Polynomial::one());
  CHECK(summand_series_closed(u2, part(2, {0, 1, 0, 1})) ==
        poly({0, 0, 0, 1, 0, 1}));
}

TEST_CASE("equivariant summand model: worked values") {
  GroupFamily u2 = GroupFamily::unitary(2);
  CHECK(summand_series_equivariant(u2, part(1, {0, 2})) == Polynomial::monomial(4));
  CHECK(summand_series_equivariant(u2, part(2, {1, 0, 1, 0})) == poly({0, 1, 0, 1}));
  CHECK(summand_series_equivariant(u2, part(2, {0, 0, 0, 2})) ==
        Polynomial::monomial(4));
  CHECK_THROWS_AS(
      summand_series_equivariant(GroupFamily::orthogonal_odd(2), part(1, {1, 1})),
      UnsupportedError);
}

TEST_CASE("hom series: unitary examples") {
  CHECK(hom_series(GroupFamily::unitary(2), 1) == poly({1, 1, 0, 1, 1}));
  CHECK(hom_series(GroupFamily::unitary(2), 2) == poly({1, 2, 2, 4, 5, 2}));
  for (int m = 1; m <= 6; ++m)
    CHECK(hom_series(GroupFamily::unitary(m), 1) ==
          oracles::unitary_group_poincare(m));
}

TEST_CASE("hom series: orthogonal identity components") {
  CHECK(hom_series(GroupFamily::orthogonal_odd(1), 1) == poly({1, 0, 0, 1}));
  // SO(2) is a circle: the torus itself.
  CHECK(hom_series(GroupFamily::orthogonal_even(1), 3) == poly({1, 3, 3, 1}));
  // SO(4) is rationally S^3 x S^3.
  CHECK(hom_series(GroupFamily::orthogonal_even(2), 1) ==
        poly({1, 0, 0, 2, 0, 0, 1}));
}

TEST_CASE("hom series n=0 is the one-point series") {
  CHECK(hom_series(GroupFamily::unitary(3), 0) == Polynomial::one());
  CHECK(hom_series(GroupFamily::symplectic(2), 0) == Polynomial::one());
}

TEST_CASE("hom mod S series") {
  GroupFamily u2 = GroupFamily::unitary(2);
  CHECK(hom_mod_s_series(u2, 2) == poly({0, 0, 2, 2, 3, 2}));
  CHECK(hom_mod_s_series(u2, 1) == poly({0, 1, 0, 1, 1}));
  CHECK(hom_mod_s_series(u2, 0) == Polynomial::zero());
  CHECK(hom_mod_s_series(GroupFamily::symplectic(1), 0) == Polynomial::zero());
}

TEST_CASE("splitting table U(2) n=2 against the published summand list") {
  SplittingTable table = splitting_table(GroupFamily::unitary(2), 2);
  REQUIRE(table.reports.size() == 10);
  CHECK(table.splitting_identity);
  CHECK(table.all_agree);
  CHECK(table.summand_total == poly({1, 2, 2, 4, 5, 2}));
  std::map<std::string, std::string> got;
  for (const auto& report : table.reports)
    got[report.partition.to_string()] = report.series_equivariant.to_string();
  CHECK(got["2|0|0|0"] == "1");
  CHECK(got["0|2|0|0"] == "t^4");
  CHECK(got["0|0|0|2"] == "t^4");
  CHECK(got["1|1|0|0"] == "t + t^3");
  CHECK(got["1|0|0|1"] == "t^2 + t^4");
  CHECK(got["0|1|0|1"] == "t^3 + t^5");
}

TEST_CASE("splitting table U(1) is a cube of monomials") {
  for (int n = 1; n <= 3; ++n) {
    SplittingTable table = splitting_table(GroupFamily::unitary(1), n);
    CHECK(table.reports.size() == (size_t(1) << n));
    for (const auto& report : table.reports) {
      int count = 0;
      for (int k = 0; k <= report.series_equivariant.degree(); ++k)
        count += report.series_equivariant.coeff(k) != 0 ? 1 : 0;
      CHECK(count == 1);  // a single monomial
    }
    CHECK(table.splitting_identity);
  }
}

TEST_CASE("splitting table Sp(1) n=2 gives the four sphere classes") {
  SplittingTable table = splitting_table(GroupFamily::symplectic(1), 2);
  REQUIRE(table.reports.size() == 4);
  std::map<std::string, std::string> got;
  for (const auto& report : table.reports)
    got[report.partition.to_string()] = report.series_equivariant.to_string();
  CHECK(got["1|0|0|0"] == "1");
  CHECK(got["0|1|0|0"] == "t^3");
  CHECK(got["0|0|1|0"] == "t^3");
  CHECK(got["0|0|0|1"] == "t^2");
  CHECK(table.splitting_identity);
  CHECK(table.all_agree);
}

TEST_CASE("splitting and model identities on a spot-check range") {
  for (auto [g, n] : std::vector<std::pair<GroupFamily, int>>{
           {GroupFamily::unitary(3), 2},
           {GroupFamily::symplectic(2), 2},
           {GroupFamily::unitary(2), 3}}) {
    SplittingTable table = splitting_table(g, n);
    CHECK(table.splitting_identity);
    CHECK(table.all_agree);
    CHECK(table.hom.has_nonnegative_coefficients());
    CHECK(table.hom.has_integer_coefficients());
  }
}

TEST_CASE("binomial assembly of the hom series") {
  for (auto [g, n] : std::vector<std::pair<GroupFamily, int>>{
           {GroupFamily::unitary(2), 2},
           {GroupFamily::unitary(2), 3},
           {GroupFamily::symplectic(1), 3}}) {
    Polynomial rhs = Polynomial::one();
    for (int r = 1; r <= n; ++r)
      rhs += hom_mod_s_series(g, r) * Rational(binomial(n, r));
    CHECK(hom_series(g, n) == rhs);
  }
}

TEST_CASE("single-block summands are monomial spheres") {
  GroupFamily u3 = GroupFamily::unitary(3);
  for (int n = 1; n <= 3; ++n)
    for (unsigned code = 0; code < (1u << n); ++code) {
      BinarySequence a(n, code);
      Polynomial s = summand_series_equivariant(
          u3, IndexedPartition::concentrated(n, 3, a));
      CHECK(s == Polynomial::monomial(sphere_dim(GroupKind::Unitary, 3, a.weight())));
    }
}

TEST_CASE("top class coefficient for even arity") {
  for (int m = 2; m <= 4; ++m) {
    Polynomial top = summand_series_equivariant(GroupFamily::unitary(m),
                                                IndexedPartition::top(2, m));
    CHECK(top.coeff(2 * m) == 1);
  }
}

TEST_CASE("stunted projective oracle values") {
  CHECK(oracles::stunted_projective_reduced_series(1) == Polynomial::monomial(3));
  CHECK(oracles::stunted_projective_reduced_series(2) == Polynomial::monomial(2));
  CHECK(oracles::stunted_projective_reduced_series(3) == Polynomial::monomial(5));
  CHECK(oracles::stunted_projective_reduced_series(4) == Polynomial::monomial(4));
}

TEST_CASE("SO(3) series against the stunted projective oracle") {
  GroupFamily so3 = GroupFamily::orthogonal_odd(1);
  for (int n = 0; n <= 4; ++n) {
    Polynomial want = Polynomial::one();
    for (int l = 1; l <= n; ++l)
      want += oracles::stunted_projective_reduced_series(l) *
              Rational(binomial(n, l));
    CHECK(hom_series(so3, n) == want);
  }
}
