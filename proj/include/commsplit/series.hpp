#pragma once

#include <vector>

#include "commsplit/polynomial.hpp"
#include "commsplit/poset.hpp"
#include "commsplit/weyl.hpp"

namespace commsplit {

/// Dimension of the sphere that the compactified commuting variety of a
/// rank-k block contributes: 0 when the block or its arity is empty,
/// arity*k for even arity, block dimension + (arity-1)*k for odd arity.
int sphere_dim(GroupKind family_kind, int block_rank, int block_arity);

/// Poincare polynomial of the partial flag manifold G/prod_a G(lambda_a):
/// a Gaussian multinomial in t^2 for U, the t^4 analogue for Sp and
/// SO(2m+1). SO(2m) is not supported.
Polynomial flag_poincare(const GroupFamily& g, const IndexedPartition& lambda);

/// Closed-form model of a stable summand's series: flag polynomial shifted
/// by the total sphere dimension. Validated elsewhere against the
/// equivariant model, which is authoritative.
Polynomial summand_series_closed(const GroupFamily& g,
                                 const IndexedPartition& lambda);

/// Equivariant model: t^{f(lambda)} times the graded multiplicity of the
/// blockwise sign character in the coinvariant algebra restricted to the
/// block Weyl group (a Frobenius-reciprocity average over its classes).
Polynomial summand_series_equivariant(const GroupFamily& g,
                                      const IndexedPartition& lambda);

/// Poincare series of Hom(Z^n, G) with |W| inverted (for SO families, of
/// the path-component of the trivial tuple): the Weyl-invariant part of
/// H*(G/T) tensor H*(T^n), computed by exact character averaging.
Polynomial hom_series(const GroupFamily& g, int n);

/// Reduced series of Hom(Z^n, G)/S_n(G): the sum of the equivariant
/// summand series over the partitions whose pattern matrix has no zero
/// column. Zero for n = 0.
Polynomial hom_mod_s_series(const GroupFamily& g, int n);

struct SphereDimEntry {
  BinarySequence block;
  int part;        // lambda_a
  int block_arity; // |a|
  int dim;
};

struct SummandReport {
  IndexedPartition partition;
  Polynomial flag_poly;
  std::vector<SphereDimEntry> sphere_dims;  // blocks with lambda_a > 0
  Polynomial series_closed;
  Polynomial series_equivariant;
  bool agree = false;

  int total_sphere_dim() const;
};

struct SplittingTable {
  GroupFamily family;
  int n = 0;
  std::vector<SummandReport> reports;   // canonical partition order
  Polynomial summand_total;             // sum of equivariant series
  Polynomial hom;                       // hom_series(family, n)
  bool splitting_identity = false;      // summand_total == hom
  bool all_agree = false;               // every report.agree
};

/// One report per partition in the poset, plus the global identity checks.
/// The per-partition loop runs in parallel; output order is canonical.
SplittingTable splitting_table(const GroupFamily& g, int n);

}  // namespace commsplit
