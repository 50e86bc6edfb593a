#include "commsplit/series.hpp"

#include <numeric>

#include "commsplit/errors.hpp"
#include "commsplit/parallel.hpp"

namespace commsplit {

namespace {

void require_summand_family(const GroupFamily& g) {
  if (g.kind != GroupKind::Unitary && g.kind != GroupKind::Symplectic)
    throw UnsupportedError(
        "summand series are only computed for U and Sp; the orthogonal "
        "summands involve quotients by non-connected groups");
}

void require_rank_match(const GroupFamily& g, const IndexedPartition& lambda) {
  if (lambda.rank() != g.rank)
    throw DimensionError("partition of " + std::to_string(lambda.rank()) +
                         " does not match the rank of " + g.name());
}

// Product over 1 <= i <= k of (1 - t^{step*i}).
Polynomial degree_ladder(int k, int step) {
  Polynomial p = Polynomial::one();
  for (int i = 1; i <= k; ++i)
    p = p * (Polynomial::one() - Polynomial::monomial(step * i));
  return p;
}

CycleClass merge_classes(const CycleClass& a, const CycleClass& b) {
  CycleClass c;
  c.positive_cycles = a.positive_cycles;
  c.positive_cycles.insert(c.positive_cycles.end(), b.positive_cycles.begin(),
                           b.positive_cycles.end());
  c.negative_cycles = a.negative_cycles;
  c.negative_cycles.insert(c.negative_cycles.end(), b.negative_cycles.begin(),
                           b.negative_cycles.end());
  c.class_size = a.class_size * b.class_size;
  return c;
}

Polynomial check_average(Polynomial sum, const Integer& order,
                         const std::string& context) {
  Polynomial averaged = sum / Rational(order);
  if (!averaged.has_integer_coefficients() ||
      !averaged.has_nonnegative_coefficients())
    throw ConsistencyError("character average is not a non-negative integer "
                           "series: " + context);
  return averaged;
}

}  // namespace

int sphere_dim(GroupKind family_kind, int block_rank, int block_arity) {
  if (block_rank < 0 || block_arity < 0)
    throw DomainError("sphere_dim arguments must be non-negative");
  if (block_rank == 0 || block_arity == 0) return 0;
  if (block_arity % 2 == 0) return block_arity * block_rank;
  return block_dim(family_kind, block_rank) + (block_arity - 1) * block_rank;
}

Polynomial flag_poincare(const GroupFamily& g, const IndexedPartition& lambda) {
  require_rank_match(g, lambda);
  int step = 0;
  switch (g.kind) {
    case GroupKind::Unitary: step = 2; break;
    case GroupKind::Symplectic:
    case GroupKind::OrthogonalOdd: step = 4; break;
    case GroupKind::OrthogonalEven:
      throw UnsupportedError("flag series for SO(2m) blocks is not provided");
  }
  Polynomial num = degree_ladder(g.rank, step);
  Polynomial den = Polynomial::one();
  for (unsigned code = 0; code < static_cast<unsigned>(lambda.size()); ++code)
    den = den * degree_ladder(lambda.part(code), step);
  return divide_exact(num, den, "flag Poincare polynomial of " + g.name() +
                                    " at " + lambda.to_string());
}

namespace {

// Shared core of the equivariant summand model: the graded average
//   (1/|W_lambda|) sum_w size(w) * coinv_trace(w) * prod_a det(w_a)^{|a|}
// over the classes of the blockwise Weyl group, shifted by t^{f(lambda)}.
Polynomial equivariant_average(const GroupFamily& g,
                               const IndexedPartition& lambda) {
  struct Block {
    int arity_weight;
    std::vector<CycleClass> classes;
  };
  std::vector<Block> blocks;
  Integer w_lambda_order = 1;
  for (unsigned code = 0; code < static_cast<unsigned>(lambda.size()); ++code) {
    int part = lambda.part(code);
    if (part == 0) continue;
    blocks.push_back(Block{lambda.sequence(code).weight(),
                           block_conjugacy_classes(g.kind, part)});
    w_lambda_order *= block_weyl_order(g.kind, part);
  }

  Polynomial num = Polynomial::one();
  for (int d : g.invariant_degrees())
    num = num * (Polynomial::one() - Polynomial::monomial(2 * d));

  Polynomial sum;
  CycleClass merged;
  auto walk = [&](auto&& self, size_t i, const CycleClass& acc, int sign) -> void {
    if (i == blocks.size()) {
      GradedTrace trace = coinvariant_trace(g, acc);
      Polynomial coinv = divide_exact(num, trace.denominator,
                                      "coinvariant trace at " + acc.to_string());
      sum += coinv * Rational(acc.class_size * sign);
      return;
    }
    for (const CycleClass& c : blocks[i].classes) {
      int block_sign =
          blocks[i].arity_weight % 2 ? det_character(c) : 1;
      self(self, i + 1, merge_classes(acc, c), sign * block_sign);
    }
  };
  walk(walk, 0, merged, 1);

  Polynomial averaged = check_average(std::move(sum), w_lambda_order,
                                      "summand at " + lambda.to_string());
  return averaged.shifted(weight(lambda));
}

}  // namespace

Polynomial summand_series_closed(const GroupFamily& g,
                                 const IndexedPartition& lambda) {
  require_summand_family(g);
  require_rank_match(g, lambda);
  int total = 0;
  for (unsigned code = 0; code < static_cast<unsigned>(lambda.size()); ++code)
    total += sphere_dim(g.kind, lambda.part(code),
                        lambda.sequence(code).weight());
  return flag_poincare(g, lambda).shifted(total);
}

Polynomial summand_series_equivariant(const GroupFamily& g,
                                      const IndexedPartition& lambda) {
  require_summand_family(g);
  require_rank_match(g, lambda);
  return equivariant_average(g, lambda);
}

Polynomial hom_series(const GroupFamily& g, int n) {
  if (n < 0) throw DomainError("hom_series requires n >= 0");
  if (g.rank < 1) throw DomainError("hom_series requires rank >= 1");
  Polynomial num = Polynomial::one();
  for (int d : g.invariant_degrees())
    num = num * (Polynomial::one() - Polynomial::monomial(2 * d));
  Polynomial sum;
  for (const CycleClass& w : conjugacy_classes(g)) {
    Polynomial coinv = divide_exact(num, coinvariant_trace(g, w).denominator,
                                    "coinvariant trace at " + w.to_string());
    sum += coinv * torus_exterior_trace(g, w, n) * Rational(w.class_size);
  }
  Polynomial series = check_average(std::move(sum), g.weyl_order(),
                                    "hom series of " + g.name());
  if (series.coeff(0) != 1)
    throw ConsistencyError("hom series of " + g.name() +
                           " has constant term != 1");
  return series;
}

Polynomial hom_mod_s_series(const GroupFamily& g, int n) {
  require_summand_family(g);
  if (n < 0) throw DomainError("hom_mod_s_series requires n >= 0");
  if (n == 0) return Polynomial::zero();  // S is empty for n = 0
  Polynomial sum;
  for (const auto& lambda : enumerate_partitions(n, g.rank))
    if (in_S(lambda)) sum += summand_series_equivariant(g, lambda);
  return sum;
}

int SummandReport::total_sphere_dim() const {
  int total = 0;
  for (const auto& entry : sphere_dims) total += entry.dim;
  return total;
}

SplittingTable splitting_table(const GroupFamily& g, int n) {
  require_summand_family(g);
  if (n < 0) throw DomainError("splitting_table requires n >= 0");
  SplittingTable table;
  table.family = g;
  table.n = n;
  auto lambdas = enumerate_partitions(n, g.rank);
  table.reports.resize(lambdas.size(),
                       SummandReport{IndexedPartition(n, std::vector<int>(
                                         size_t(1) << n, 0)),
                                     {}, {}, {}, {}, false});
  parallel_for(static_cast<int>(lambdas.size()), [&](int i) {
    const IndexedPartition& lambda = lambdas[i];
    SummandReport report{lambda, {}, {}, {}, {}, false};
    report.flag_poly = flag_poincare(g, lambda);
    for (unsigned code = 0; code < static_cast<unsigned>(lambda.size());
         ++code) {
      int part = lambda.part(code);
      if (part == 0) continue;
      BinarySequence a = lambda.sequence(code);
      report.sphere_dims.push_back(
          SphereDimEntry{a, part, a.weight(),
                         sphere_dim(g.kind, part, a.weight())});
    }
    report.series_closed = summand_series_closed(g, lambda);
    report.series_equivariant = summand_series_equivariant(g, lambda);
    report.agree = report.series_closed == report.series_equivariant;
    table.reports[i] = std::move(report);
  });
  table.summand_total = Polynomial::zero();
  table.all_agree = true;
  for (const auto& report : table.reports) {
    table.summand_total += report.series_equivariant;
    table.all_agree = table.all_agree && report.agree;
  }
  table.hom = hom_series(g, n);
  table.splitting_identity = table.summand_total == table.hom;
  return table;
}

}  // namespace commsplit
