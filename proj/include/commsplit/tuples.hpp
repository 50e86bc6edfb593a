#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "commsplit/poset.hpp"

namespace commsplit {

using ComplexMatrix = Eigen::MatrixXcd;

struct Tolerances {
  double unitary = 1e-9;   // ||U*U - 1||_max
  double commute = 1e-8;   // ||[U_i, U_j]||_max
  double skew = 1e-9;      // ||X* + X||_max
  double one = 1e-6;       // eigenvalue-equals-1 test
  double margin = 0.1;     // generated eigenvalues keep |x - 1| >= margin
  double diagonal = 1e-10; // accepted off-diagonal residual
  double singular = 1e-8;  // smallest singular value accepted by cayley_inv
  int max_retries = 8;     // refinement budget per degenerate cluster
};

/// n pairwise-commuting m x m unitaries (within tolerance).
struct UnitaryTuple {
  int n = 0, m = 0;
  std::vector<ComplexMatrix> matrices;
};

/// n pairwise-commuting m x m skew-Hermitian matrices.
struct SkewHermitianTuple {
  int n = 0, m = 0;
  std::vector<ComplexMatrix> matrices;
};

double max_abs(const ComplexMatrix& a);
double unitarity_residual(const UnitaryTuple& t);
double skewness_residual(const SkewHermitianTuple& t);
double commutator_residual(const std::vector<ComplexMatrix>& matrices);

/// Throws DomainError unless every tolerance is strictly positive and the
/// margin lies in (0, 2).
void check_tolerances(const Tolerances& tol);

/// Throws ClassificationError when a tuple invariant fails.
void validate(const UnitaryTuple& t, const Tolerances& tol);
void validate(const SkewHermitianTuple& t, const Tolerances& tol);

/// Deterministic random source: mt19937_64 plus explicit transforms, so
/// byte-identical streams do not depend on library distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  double uniform();  // [0, 1)
  double normal();
  std::complex<double> complex_normal();

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the
/// R-diagonal phases absorbed into Q.
ComplexMatrix haar_unitary(int m, Rng& rng);

/// Diagonal tuple realizing the stratum of lambda exactly: entry (i, j) is 1
/// where row i of M(lambda) has bit 0 at j, and a sampled point of the unit
/// circle at distance >= margin from 1 where the bit is 1.
UnitaryTuple random_torus_tuple(const IndexedPartition& lambda, uint64_t seed,
                                const Tolerances& tol = {});

/// The torus tuple conjugated by a Haar unitary derived from the same seed.
UnitaryTuple random_commuting_tuple(const IndexedPartition& lambda,
                                    uint64_t seed, const Tolerances& tol = {});

/// Matrixwise (X - 1)(X + 1)^{-1}; lands in the unitaries without
/// eigenvalue 1 and preserves commutativity up to conditioning.
UnitaryTuple cayley(const SkewHermitianTuple& x, const Tolerances& tol = {});

/// Amplification bound for the transform: the commutator residual of
/// cayley(x) is at most this factor times the residual of x. Writing each
/// image as 1 - 2(X_j + 1)^{-1}, the bound is 4m / sigma^4 with sigma the
/// smallest singular value over the resolvents X_j + 1 (at least 1 for
/// exactly skew-Hermitian input).
double cayley_condition_bound(const SkewHermitianTuple& x);

/// Matrixwise (1 - A)^{-1}(1 + A). Throws SingularityError naming the
/// eigenvalues near 1 when 1 - A is not invertible within tolerance.
SkewHermitianTuple cayley_inv(const UnitaryTuple& a, const Tolerances& tol = {});

}  // namespace commsplit
