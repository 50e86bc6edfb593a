#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "commsplit/errors.hpp"
#include "commsplit/io.hpp"
#include "commsplit/oracles.hpp"
#include "commsplit/weyl.hpp"

using namespace commsplit;

namespace {

Polynomial poly(std::initializer_list<long long> coeffs) {
  std::vector<Rational> c;
  for (long long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

CycleClass cls(std::vector<int> pos, std::vector<int> neg) {
  CycleClass c;
  c.positive_cycles = std::move(pos);
  c.negative_cycles = std::move(neg);
  return c;
}

}  // namespace

TEST_CASE("family constants") {
  CHECK(GroupFamily::unitary(3).dim() == 9);
  CHECK(GroupFamily::symplectic(2).dim() == 10);
  CHECK(GroupFamily::orthogonal_odd(1).dim() == 3);   // SO(3)
  CHECK(GroupFamily::orthogonal_even(2).dim() == 6);  // SO(4)
  CHECK(GroupFamily::unitary(4).weyl_order() == 24);
  CHECK(GroupFamily::symplectic(3).weyl_order() == 48);
  CHECK(GroupFamily::orthogonal_even(3).weyl_order() == 24);
  CHECK(GroupFamily::unitary(3).invariant_degrees() == std::vector<int>({1, 2, 3}));
  CHECK(GroupFamily::symplectic(2).invariant_degrees() == std::vector<int>({2, 4}));
  CHECK(GroupFamily::orthogonal_even(2).invariant_degrees() ==
        std::vector<int>({2, 2}));
  CHECK(GroupFamily::orthogonal_odd(2).name() == "SO(5)");
}

TEST_CASE("symmetric group classes") {
  auto classes = conjugacy_classes(GroupFamily::unitary(3));
  REQUIRE(classes.size() == 3);
  std::map<std::vector<int>, Integer> sizes;
  for (const auto& c : classes) sizes[c.positive_cycles] = c.class_size;
  CHECK(sizes[{1, 1, 1}] == 1);
  CHECK(sizes[{2, 1}] == 3);
  CHECK(sizes[{3}] == 2);
}

TEST_CASE("hyperoctahedral rank 1") {
  auto classes = conjugacy_classes(GroupFamily::symplectic(1));
  REQUIRE(classes.size() == 2);
  for (const auto& c : classes) CHECK(c.class_size == 1);
}

TEST_CASE("class sizes sum to the group order") {
  for (int m = 1; m <= 4; ++m) {
    for (auto g : {GroupFamily::unitary(m), GroupFamily::symplectic(m),
                   GroupFamily::orthogonal_odd(m), GroupFamily::orthogonal_even(m)}) {
      Integer total = 0;
      for (const auto& c : conjugacy_classes(g)) {
        total += c.class_size;
        CHECK(c.total() == m);
      }
      CHECK(total == g.weyl_order());
    }
  }
}

TEST_CASE("hyperoctahedral classes match the brute-force orbits") {
  for (int m = 1; m <= 4; ++m) {
    auto closed = conjugacy_classes(GroupFamily::symplectic(m));
    auto brute = oracles::brute_force_signed_classes(m, false);
    REQUIRE(closed.size() == brute.size());
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> sizes;
    for (const auto& c : brute)
      sizes[{c.positive_cycles, c.negative_cycles}] = c.class_size;
    for (const auto& c : closed)
      CHECK(sizes[{c.positive_cycles, c.negative_cycles}] == c.class_size);
  }
}

TEST_CASE("even orthogonal classes match the brute-force orbits") {
  for (int m = 2; m <= 4; ++m) {
    auto lib = conjugacy_classes(GroupFamily::orthogonal_even(m));
    auto brute = oracles::brute_force_signed_classes(m, true);
    REQUIRE(lib.size() == brute.size());
    for (size_t i = 0; i < lib.size(); ++i) {
      CHECK(lib[i].positive_cycles == brute[i].positive_cycles);
      CHECK(lib[i].negative_cycles == brute[i].negative_cycles);
      CHECK(lib[i].class_size == brute[i].class_size);
    }
  }
}

TEST_CASE("split classes of SO(4) are visible") {
  // D_2 is abelian of order 4: the positive 2-cycle type splits.
  auto classes = conjugacy_classes(GroupFamily::orthogonal_even(2));
  CHECK(classes.size() == 4);
  int two_cycles = 0;
  for (const auto& c : classes)
    if (c.positive_cycles == std::vector<int>{2}) {
      CHECK(c.class_size == 1);
      ++two_cycles;
    }
  CHECK(two_cycles == 2);
}

TEST_CASE("even orthogonal brute force has a capacity bound") {
  CHECK_THROWS_AS(conjugacy_classes(GroupFamily::orthogonal_even(9), 6),
                  CapacityError);
}

TEST_CASE("class tables dump as JSON") {
  Json j = conjugacy_classes_to_json(GroupFamily::symplectic(2));
  CHECK(j["classes"].size() == 5);
  Integer total = 0;
  for (const auto& c : j["classes"]) total += c["size"].get<int64_t>();
  CHECK(total == 8);
}

TEST_CASE("coinvariant traces from the worked examples") {
  GroupFamily u2 = GroupFamily::unitary(2);
  CHECK(coinvariant_trace(u2, cls({1, 1}, {})).to_polynomial("id") ==
        poly({1, 0, 1}));
  CHECK(coinvariant_trace(u2, cls({2}, {})).to_polynomial("swap") ==
        poly({1, 0, -1}));
  GroupFamily sp1 = GroupFamily::symplectic(1);
  CHECK(coinvariant_trace(sp1, cls({}, {1})).to_polynomial("neg") ==
        poly({1, 0, -1}));
}

TEST_CASE("class and family must match") {
  CHECK_THROWS_AS(coinvariant_trace(GroupFamily::unitary(2), cls({1}, {})),
                  DomainError);
  CHECK_THROWS_AS(coinvariant_trace(GroupFamily::unitary(2), cls({1}, {1})),
                  DomainError);
}

TEST_CASE("torus exterior traces from the worked examples") {
  GroupFamily u2 = GroupFamily::unitary(2);
  CHECK(torus_exterior_trace(u2, cls({1, 1}, {}), 1) == poly({1, 2, 1}));
  CHECK(torus_exterior_trace(u2, cls({2}, {}), 1) == poly({1, 0, -1}));
  GroupFamily sp1 = GroupFamily::symplectic(1);
  CHECK(torus_exterior_trace(sp1, cls({}, {1}), 2) == poly({1, -2, 1}));
  CHECK(torus_exterior_trace(sp1, cls({}, {1}), 0) == Polynomial::one());
}

TEST_CASE("determinant character") {
  CHECK(det_character(cls({1, 1, 1}, {})) == 1);
  CHECK(det_character(cls({2, 1}, {})) == -1);
  CHECK(det_character(cls({}, {1})) == -1);
  CHECK(det_character(cls({}, {2})) == 1);
  CHECK(det_character(cls({3}, {1, 1})) == 1);
}

TEST_CASE("coinvariant trace divides exactly for every class") {
  for (int m = 1; m <= 5; ++m)
    for (auto g : {GroupFamily::unitary(m), GroupFamily::symplectic(m)})
      for (const auto& w : conjugacy_classes(g))
        CHECK_NOTHROW(coinvariant_trace(g, w).to_polynomial(w.to_string()));
  for (int m = 1; m <= 4; ++m) {
    GroupFamily g = GroupFamily::orthogonal_even(m);
    for (const auto& w : conjugacy_classes(g))
      CHECK_NOTHROW(coinvariant_trace(g, w).to_polynomial(w.to_string()));
  }
}

TEST_CASE("identity trace is the flag manifold series") {
  for (int m = 1; m <= 4; ++m) {
    GroupFamily g = GroupFamily::unitary(m);
    CycleClass id = cls(std::vector<int>(m, 1), {});
    Polynomial series = coinvariant_trace(g, id).to_polynomial("id");
    CHECK(series.coeff(0) == 1);
    CHECK(series.has_nonnegative_coefficients());
    CHECK(series.sum_of_coefficients() == Rational(g.weyl_order()));
  }
}

TEST_CASE("sign-twisted average picks out the top class") {
  // (1/|W|) sum size * det * coinv = t^{d - r}: Poincare duality of (G/T)/W
  // with sign coefficients.
  auto check_family = [](const GroupFamily& g) {
    Polynomial sum;
    for (const auto& w : conjugacy_classes(g))
      sum += coinvariant_trace(g, w).to_polynomial("avg") *
             Rational(w.class_size * det_character(w));
    Polynomial averaged = sum / Rational(g.weyl_order());
    CHECK(averaged == Polynomial::monomial(g.dim() - g.rank));
  };
  for (int m = 1; m <= 4; ++m) check_family(GroupFamily::unitary(m));
  for (int m = 1; m <= 3; ++m) check_family(GroupFamily::symplectic(m));
}
