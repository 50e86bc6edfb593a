#include "commsplit/selftest.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "commsplit/classify.hpp"
#include "commsplit/errors.hpp"
#include "commsplit/modp.hpp"
#include "commsplit/oracles.hpp"
#include "commsplit/parallel.hpp"
#include "commsplit/series.hpp"

namespace commsplit {

namespace {

Polynomial poly_from(std::initializer_list<long long> coeffs) {
  std::vector<Rational> c;
  for (long long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

double tuple_distance(const UnitaryTuple& a, const UnitaryTuple& b) {
  double r = 0.0;
  for (size_t j = 0; j < a.matrices.size(); ++j)
    r = std::max(r, max_abs(a.matrices[j] - b.matrices[j]));
  return r;
}

double tuple_distance(const SkewHermitianTuple& a, const SkewHermitianTuple& b) {
  double r = 0.0;
  for (size_t j = 0; j < a.matrices.size(); ++j)
    r = std::max(r, max_abs(a.matrices[j] - b.matrices[j]));
  return r;
}

struct Failure {
  std::mutex mutex;
  std::string first;
  std::atomic<int> count{0};

  void record(const std::string& message) {
    count.fetch_add(1);
    std::lock_guard<std::mutex> lock(mutex);
    if (first.empty()) first = message;
  }
  bool ok() const { return count.load() == 0; }
};

// ---- criterion bodies -------------------------------------------------

std::string criterion_table1() {
  SplittingTable table = splitting_table(GroupFamily::unitary(2), 2);
  if (table.reports.size() != 10)
    return "expected 10 summands, got " + std::to_string(table.reports.size());
  const std::map<std::string, Polynomial> expected = {
      {"2|0|0|0", Polynomial::one()},
      {"0|2|0|0", Polynomial::monomial(4)},
      {"0|0|2|0", Polynomial::monomial(4)},
      {"0|0|0|2", Polynomial::monomial(4)},
      {"1|1|0|0", Polynomial::monomial(1) + Polynomial::monomial(3)},
      {"1|0|1|0", Polynomial::monomial(1) + Polynomial::monomial(3)},
      {"1|0|0|1", Polynomial::monomial(2) + Polynomial::monomial(4)},
      {"0|1|1|0", Polynomial::monomial(2) + Polynomial::monomial(4)},
      {"0|1|0|1", Polynomial::monomial(3) + Polynomial::monomial(5)},
      {"0|0|1|1", Polynomial::monomial(3) + Polynomial::monomial(5)},
  };
  for (const auto& report : table.reports) {
    auto it = expected.find(report.partition.to_string());
    if (it == expected.end())
      return "unexpected partition " + report.partition.to_string();
    if (report.series_equivariant != it->second)
      return "series mismatch at " + report.partition.to_string() + ": got " +
             report.series_equivariant.to_string() + ", want " +
             it->second.to_string();
  }
  return "";
}

std::vector<std::pair<GroupFamily, int>> identity_ranges() {
  std::vector<std::pair<GroupFamily, int>> ranges;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 4; ++m) ranges.push_back({GroupFamily::unitary(m), n});
    for (int m = 1; m <= 3; ++m) ranges.push_back({GroupFamily::symplectic(m), n});
  }
  return ranges;
}

std::string criterion_splitting_identity() {
  for (auto [g, n] : identity_ranges()) {
    Polynomial total;
    auto lambdas = enumerate_partitions(n, g.rank);
    std::vector<Polynomial> pieces(lambdas.size());
    parallel_for(static_cast<int>(lambdas.size()), [&, &g = g](int i) {
      pieces[i] = summand_series_equivariant(g, lambdas[i]);
    });
    for (const auto& piece : pieces) total += piece;
    Polynomial hom = hom_series(g, n);
    if (total != hom)
      return g.name() + " n=" + std::to_string(n) + ": sum " +
             total.to_string() + " != hom " + hom.to_string();
  }
  return "";
}

std::string criterion_model_agreement() {
  for (auto [g, n] : identity_ranges()) {
    auto lambdas = enumerate_partitions(n, g.rank);
    Failure failure;
    parallel_for(static_cast<int>(lambdas.size()), [&, &g = g](int i) {
      Polynomial closed = summand_series_closed(g, lambdas[i]);
      Polynomial equi = summand_series_equivariant(g, lambdas[i]);
      if (closed != equi)
        failure.record(g.name() + " at " + lambdas[i].to_string() + ": closed " +
                       closed.to_string() + " != equivariant " +
                       equi.to_string());
    });
    if (!failure.ok()) return failure.first;
  }
  return "";
}

std::string criterion_classical_oracle() {
  for (int m = 1; m <= 6; ++m) {
    Polynomial got = hom_series(GroupFamily::unitary(m), 1);
    Polynomial want = oracles::unitary_group_poincare(m);
    if (got != want)
      return "U(" + std::to_string(m) + "): got " + got.to_string() +
             ", want " + want.to_string();
  }
  return "";
}

std::string criterion_su2_example() {
  Polynomial got = hom_series(GroupFamily::unitary(2), 2);
  Polynomial want = poly_from({1, 2, 2, 4, 5, 2});
  if (got != want)
    return "got " + got.to_string() + ", want " + want.to_string();
  return "";
}

std::string criterion_adem_cohen() {
  Polynomial q2 = hom_mod_s_series(GroupFamily::unitary(2), 2);
  Polynomial q2_want = poly_from({0, 0, 2, 2, 3, 2});
  if (q2 != q2_want)
    return "Q_2(U(2)) = " + q2.to_string() + ", want " + q2_want.to_string();
  for (auto [g, n] : identity_ranges()) {
    Polynomial rhs = Polynomial::one();  // r = 0 term
    for (int r = 1; r <= n; ++r)
      rhs += hom_mod_s_series(g, r) * Rational(binomial(n, r));
    Polynomial lhs = hom_series(g, n);
    if (lhs != rhs)
      return g.name() + " n=" + std::to_string(n) + ": hom " +
             lhs.to_string() + " != binomial sum " + rhs.to_string();
  }
  return "";
}

std::string criterion_modp() {
  Polynomial flag2 = flag_unordered_series(2);
  if (flag2 != poly_from({1, 1, 1}))
    return "flag series at p=2 is " + flag2.to_string();
  for (long long p : {2, 3, 5, 7})
    for (int n : {4, 6, 8}) {
      Polynomial closed = cnup_modp_closed(p, n);
      Polynomial gysin = cnup_modp_gysin(p, n);
      if (closed != gysin)
        return "p=" + std::to_string(p) + " n=" + std::to_string(n) +
               ": closed != gysin";
    }
  for (long long p : {3, 5, 7, 11, 13}) {
    Polynomial regenerated;
    for (int d : guerra_jana_degrees(p))
      regenerated += Polynomial::monomial(d);
    if (regenerated != flag_unordered_series(p))
      return "degree multiset does not regenerate the series at p=" +
             std::to_string(p);
  }
  return "";
}

std::string criterion_char0_monomials() {
  std::vector<GroupFamily> families;
  for (int m = 1; m <= 4; ++m) families.push_back(GroupFamily::unitary(m));
  for (int m = 1; m <= 3; ++m) families.push_back(GroupFamily::symplectic(m));
  for (const auto& g : families)
    for (int n = 1; n <= 4; ++n)
      for (unsigned code = 0; code < (1u << n); ++code) {
        BinarySequence a(n, code);
        IndexedPartition lambda = IndexedPartition::concentrated(n, g.rank, a);
        Polynomial got = summand_series_equivariant(g, lambda);
        Polynomial want =
            Polynomial::monomial(sphere_dim(g.kind, g.rank, a.weight()));
        if (got != want)
          return g.name() + " block " + a.to_string() + ": got " +
                 got.to_string() + ", want " + want.to_string();
      }
  return "";
}

std::string criterion_so3() {
  GroupFamily so3 = GroupFamily::orthogonal_odd(1);
  for (int n = 0; n <= 4; ++n) {
    Polynomial want = Polynomial::one();
    for (int l = 1; l <= n; ++l)
      want += oracles::stunted_projective_reduced_series(l) *
              Rational(binomial(n, l));
    Polynomial got = hom_series(so3, n);
    if (got != want)
      return "n=" + std::to_string(n) + ": got " + got.to_string() +
             ", want " + want.to_string();
  }
  return "";
}

std::string criterion_numerical() {
  const Tolerances tol;  // margin 0.1, one 1e-6
  const int seeds = 100;

  // Round trip of classification over every stratum, n <= 3, m <= 4.
  {
    std::vector<IndexedPartition> lambdas;
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= 4; ++m)
        for (auto& lambda : enumerate_partitions(n, m))
          lambdas.push_back(std::move(lambda));
    Failure failure;
    parallel_for(static_cast<int>(lambdas.size()), [&](int i) {
      const IndexedPartition& lambda = lambdas[i];
      for (int s = 0; s < seeds; ++s) {
        UnitaryTuple t = random_commuting_tuple(lambda, 1000 + s, tol);
        StratumReport report = classify(t, s, tol);
        if (report.partition != lambda) {
          failure.record("classification of " + lambda.to_string() +
                         " returned " + report.partition.to_string() +
                         " at seed " + std::to_string(1000 + s));
          return;
        }
      }
    });
    if (!failure.ok())
      return failure.first + " (" + std::to_string(failure.count.load()) +
             " strata failed)";
  }

  // Conjugation invariance on the (n, m) = (2, 3) strata.
  {
    Failure failure;
    auto lambdas = enumerate_partitions(2, 3);
    parallel_for(static_cast<int>(lambdas.size()), [&](int i) {
      const IndexedPartition& lambda = lambdas[i];
      for (int s = 0; s < seeds; ++s) {
        UnitaryTuple t = random_commuting_tuple(lambda, 2000 + s, tol);
        Rng rng(7000 + s);
        ComplexMatrix g = haar_unitary(t.m, rng);
        UnitaryTuple conj = t;
        for (auto& u : conj.matrices) u = g * u * g.adjoint();
        if (classify(conj, s, tol).partition != lambda) {
          failure.record("conjugation changed the class of " +
                         lambda.to_string());
          return;
        }
      }
    });
    if (!failure.ok()) return failure.first;
  }

  // Cayley round trips.
  for (int s = 0; s < seeds; ++s) {
    int m = 1 + s % 6;
    Rng rng(3000 + s);
    ComplexMatrix g = haar_unitary(m, rng);
    SkewHermitianTuple x{2, m, {}};
    for (int j = 0; j < 2; ++j) {
      ComplexMatrix d = ComplexMatrix::Zero(m, m);
      for (int i = 0; i < m; ++i)
        d(i, i) = std::complex<double>(0.0, 4.0 * rng.uniform() - 2.0);
      x.matrices.push_back(g * d * g.adjoint());
    }
    SkewHermitianTuple back = cayley_inv(cayley(x, tol), tol);
    if (tuple_distance(back, x) > 1e-10)
      return "cayley_inv(cayley(X)) drifted by " +
             std::to_string(tuple_distance(back, x));
    UnitaryTuple a =
        random_commuting_tuple(IndexedPartition::top(2, m), 4000 + s, tol);
    UnitaryTuple forward = cayley(cayley_inv(a, tol), tol);
    if (tuple_distance(forward, a) > 1e-10)
      return "cayley(cayley_inv(A)) drifted by " +
             std::to_string(tuple_distance(forward, a));
  }

  // Block decomposition and shuffle reassembly.
  {
    std::vector<IndexedPartition> lambdas;
    for (int n = 1; n <= 2; ++n)
      for (int m = 1; m <= 3; ++m)
        for (auto& lambda : enumerate_partitions(n, m))
          lambdas.push_back(std::move(lambda));
    Failure failure;
    parallel_for(static_cast<int>(lambdas.size()), [&](int i) {
      for (int s = 0; s < seeds; ++s) {
        UnitaryTuple t = random_commuting_tuple(lambdas[i], 5000 + s, tol);
        UnitaryTuple rebuilt = reassemble(block_decompose(t, s, tol));
        if (tuple_distance(rebuilt, t) > 1e-10) {
          failure.record("reassembly of " + lambdas[i].to_string() +
                         " drifted by " +
                         std::to_string(tuple_distance(rebuilt, t)));
          return;
        }
      }
    });
    if (!failure.ok()) return failure.first;
  }

  // Closure probes descend in the poset.
  {
    Failure failure;
    auto lambdas = enumerate_partitions(2, 3);
    parallel_for(static_cast<int>(lambdas.size()), [&](int i) {
      for (int s = 0; s < seeds; ++s) {
        auto chain = closure_probe(lambdas[i], 6, 6000 + s, tol);
        for (size_t k = 0; k + 1 < chain.size(); ++k)
          if (!leq(chain[k + 1], chain[k])) {
            failure.record("closure probe of " + lambdas[i].to_string() +
                           " is not monotone at step " + std::to_string(k));
            return;
          }
        if (chain.back() != IndexedPartition::bottom(2, 3)) {
          failure.record("full flow from " + lambdas[i].to_string() +
                         " did not reach the bottom stratum");
          return;
        }
      }
    });
    if (!failure.ok()) return failure.first;
  }
  return "";
}

std::string criterion_poset_oracle() {
  const std::vector<std::pair<int, int>> cases = {{1, 5}, {2, 4}, {3, 3}};
  for (auto [n, m] : cases) {
    auto lambdas = enumerate_partitions(n, m);
    const int count = static_cast<int>(lambdas.size());
    Failure failure;
    parallel_for(count, [&, n = n, m = m](int i) {
      for (int j = 0; j < count; ++j) {
        bool fast = leq(lambdas[i], lambdas[j]);
        bool brute = oracles::brute_force_leq(lambdas[i], lambdas[j]);
        if (fast != brute) {
          failure.record("(" + std::to_string(n) + "," + std::to_string(m) +
                         "): matcher says " + std::to_string(fast) + " at " +
                         lambdas[i].to_string() + " <= " +
                         lambdas[j].to_string());
          return;
        }
      }
    });
    if (!failure.ok()) return failure.first;
  }
  return "";
}

struct CriterionSpec {
  int id;
  const char* name;
  double budget_seconds;  // 0 = no budget
  std::string (*body)();
};

const CriterionSpec kCriteria[] = {
    {1, "TABLE 1 REPRODUCTION", 1.0, criterion_table1},
    {2, "SPLITTING IDENTITY", 60.0, criterion_splitting_identity},
    {3, "MODEL AGREEMENT", 0.0, criterion_model_agreement},
    {4, "CLASSICAL ORACLE", 0.0, criterion_classical_oracle},
    {5, "EXAMPLE U(2) n=2", 0.0, criterion_su2_example},
    {6, "ADEM-COHEN IDENTITY", 0.0, criterion_adem_cohen},
    {7, "MOD-P IDENTITY", 1.0, criterion_modp},
    {8, "CHAR0 MONOMIALS", 0.0, criterion_char0_monomials},
    {9, "SO(3) EXAMPLE", 0.0, criterion_so3},
    {10, "NUMERICAL SUITE", 120.0, criterion_numerical},
    {11, "POSET ORACLE", 0.0, criterion_poset_oracle},
};

}  // namespace

void print_result_line(std::ostream& out, const CriterionResult& result) {
  out << (result.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << result.id
      << ". " << result.name << "  (" << std::fixed << std::setprecision(2)
      << result.seconds << "s)";
  if (!result.pass && !result.detail.empty()) out << "  -- " << result.detail;
  out << "\n" << std::defaultfloat;
}

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
  std::vector<CriterionResult> results;
  for (const auto& spec : kCriteria) {
    CriterionResult result;
    result.id = spec.id;
    result.name = spec.name;
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = spec.body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    result.pass = detail.empty();
    result.detail = detail;
    if (result.pass && spec.budget_seconds > 0 &&
        result.seconds > spec.budget_seconds) {
      result.pass = false;
      result.detail = "runtime budget " + std::to_string(spec.budget_seconds) +
                      "s exceeded";
    }
    if (progress) print_result_line(*progress, result);
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace commsplit
