#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "commsplit/tuples.hpp"

namespace commsplit {

struct DiagonalizationResult {
  ComplexMatrix conjugator;  // h with h^* U_j h diagonal within residual
  ComplexMatrix rows;        // m x n, rows(i, j) = (h^* U_j h)(i, i)
  double residual = 0.0;     // max off-diagonal magnitude over all j
};

/// Simultaneously diagonalizes a commuting unitary tuple. A random
/// Hermitian combination of the matrices and their adjoints is
/// eigendecomposed; clusters that remain coupled are re-randomized
/// recursively within their own span, with a bounded retry budget.
DiagonalizationResult simultaneous_diagonalize(const UnitaryTuple& t,
                                               uint64_t seed,
                                               const Tolerances& tol = {});

struct StratumReport {
  IndexedPartition partition;
  ComplexMatrix conjugator;
  ComplexMatrix eigen_rows;  // rows sorted so binary sequences non-decrease
  double residual = 0.0;
  Tolerances tolerance_used;
  bool ambiguous = false;  // an entry fell in the (one, 2*one] band
};

/// Diagonalizes, maps each eigen-row to its binary sequence via the
/// |x - 1| <= one test, sorts rows into block order and reads off the
/// partition of the stratum.
StratumReport classify(const UnitaryTuple& t, uint64_t seed = 0,
                       const Tolerances& tol = {});

struct TupleBlock {
  BinarySequence index;  // a
  UnitaryTuple tuple;    // |a| matrices of size lambda_a
};

struct BlockDecomposition {
  IndexedPartition partition;
  ComplexMatrix conjugator;
  std::vector<TupleBlock> blocks;  // blocks with lambda_a > 0, in I order
};

/// Splits a commuting tuple into its per-block commuting sub-tuples,
/// dropping the coordinates where a(i) = 0 (the inverse of the shuffle).
BlockDecomposition block_decompose(const UnitaryTuple& t, uint64_t seed = 0,
                                   const Tolerances& tol = {});

/// The shuffle sh_a: places the |a| block matrices at the coordinates
/// where a(i) = 1 and the identity elsewhere.
std::vector<ComplexMatrix> shuffle(const BinarySequence& a,
                                   const std::vector<ComplexMatrix>& block,
                                   int block_rank);

/// Rebuilds the tuple from a decomposition: shuffle each block, take block
/// sums in I order, conjugate back.
UnitaryTuple reassemble(const BlockDecomposition& d);

/// Generates a torus tuple in the stratum of lambda, then scales the
/// selected non-unit angles toward 0 in `steps` equal stages, classifying
/// after each one. Entries are (row, coordinate) pairs in the block order
/// of M(lambda); by default every non-unit entry flows.
std::vector<IndexedPartition> closure_probe(
    const IndexedPartition& lambda, int steps, uint64_t seed,
    const Tolerances& tol = {},
    const std::optional<std::vector<std::pair<int, int>>>& entries = std::nullopt);

}  // namespace commsplit
