#include "commsplit/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "commsplit/errors.hpp"

namespace commsplit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double offdiag_max(const ComplexMatrix& a) {
  double r = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) r = std::max(r, std::abs(a(i, j)));
  return r;
}

// One refinement pass on the span of V[:, cols]: rotate by the eigenbasis
// of a fresh random Hermitian combination, then recurse into any groups of
// columns that are still coupled.
void refine(const std::vector<ComplexMatrix>& us, ComplexMatrix& v,
            const std::vector<int>& cols, Rng& rng, int depth,
            const Tolerances& tol) {
  const int k = static_cast<int>(cols.size());
  if (k <= 1) return;
  if (depth > tol.max_retries) {
    std::ostringstream msg;
    msg << "refinement budget exhausted on a " << k
        << "-dimensional cluster (residual target " << tol.diagonal << ")";
    throw DegeneracyError(msg.str());
  }

  ComplexMatrix w(v.rows(), k);
  for (int i = 0; i < k; ++i) w.col(i) = v.col(cols[i]);

  ComplexMatrix h = ComplexMatrix::Zero(k, k);
  for (const auto& u : us) {
    ComplexMatrix r = w.adjoint() * u * w;
    std::complex<double> c(rng.normal(), rng.normal());
    h += c.real() * (r + r.adjoint()) +
         c.imag() * (std::complex<double>(0, -1) * (r - r.adjoint()));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  if (eig.info() != Eigen::Success)
    throw DegeneracyError("eigendecomposition failed during refinement");
  w = w * eig.eigenvectors();
  for (int i = 0; i < k; ++i) v.col(cols[i]) = w.col(i);

  // Columns that still talk to each other form the clusters to refine.
  std::vector<std::vector<bool>> coupled(k, std::vector<bool>(k, false));
  for (const auto& u : us) {
    ComplexMatrix r = w.adjoint() * u * w;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (i != j && std::abs(r(i, j)) > tol.diagonal) coupled[i][j] = true;
  }
  std::vector<int> component(k, -1);
  for (int start = 0; start < k; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> queue{start};
    component[start] = start;
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int j = 0; j < k; ++j)
        if (component[j] < 0 && (coupled[queue[qi]][j] || coupled[j][queue[qi]])) {
          component[j] = start;
          queue.push_back(j);
        }
  }
  for (int root = 0; root < k; ++root) {
    std::vector<int> cluster;
    for (int i = 0; i < k; ++i)
      if (component[i] == root) cluster.push_back(cols[i]);
    if (cluster.size() > 1) refine(us, v, cluster, rng, depth + 1, tol);
  }
}

}  // namespace

DiagonalizationResult simultaneous_diagonalize(const UnitaryTuple& t,
                                               uint64_t seed,
                                               const Tolerances& tol) {
  validate(t, tol);
  ComplexMatrix v = ComplexMatrix::Identity(t.m, t.m);
  Rng rng(seed ^ 0xd1b54a32d192ed03ull);
  std::vector<int> all(t.m);
  std::iota(all.begin(), all.end(), 0);
  refine(t.matrices, v, all, rng, 0, tol);

  DiagonalizationResult result;
  result.conjugator = v;
  result.rows = ComplexMatrix(t.m, t.n);
  for (int j = 0; j < t.n; ++j) {
    ComplexMatrix d = v.adjoint() * t.matrices[j] * v;
    result.residual = std::max(result.residual, offdiag_max(d));
    for (int i = 0; i < t.m; ++i) result.rows(i, j) = d(i, i);
  }
  if (result.residual > tol.diagonal)
    throw DegeneracyError("diagonalization residual above tolerance after "
                          "refinement");
  return result;
}

StratumReport classify(const UnitaryTuple& t, uint64_t seed,
                       const Tolerances& tol) {
  DiagonalizationResult diag = simultaneous_diagonalize(t, seed, tol);

  std::vector<unsigned> codes(t.m, 0);
  bool ambiguous = false;
  for (int i = 0; i < t.m; ++i) {
    unsigned code = 0;
    for (int j = 0; j < t.n; ++j) {
      double distance = std::abs(diag.rows(i, j) - std::complex<double>(1.0));
      code = (code << 1) | (distance <= tol.one ? 0u : 1u);
      if (distance > tol.one && distance <= 2.0 * tol.one) ambiguous = true;
    }
    codes[i] = code;
  }

  std::vector<int> order(t.m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return codes[a] < codes[b]; });

  std::vector<int> parts(size_t(1) << t.n, 0);
  for (unsigned code : codes) ++parts[code];
  StratumReport report{IndexedPartition(t.n, std::move(parts)),
                       ComplexMatrix(t.m, t.m),
                       ComplexMatrix(t.m, t.n),
                       0.0,
                       tol,
                       false};
  for (int i = 0; i < t.m; ++i) {
    report.conjugator.col(i) = diag.conjugator.col(order[i]);
    report.eigen_rows.row(i) = diag.rows.row(order[i]);
  }
  report.residual = diag.residual;
  report.tolerance_used = tol;
  report.ambiguous = ambiguous;
  return report;
}

BlockDecomposition block_decompose(const UnitaryTuple& t, uint64_t seed,
                                   const Tolerances& tol) {
  StratumReport report = classify(t, seed, tol);
  BlockDecomposition out{report.partition, report.conjugator, {}};
  int offset = 0;
  for (unsigned code = 0; code < static_cast<unsigned>(report.partition.size());
       ++code) {
    const int part = report.partition.part(code);
    if (part == 0) continue;
    BinarySequence a = report.partition.sequence(code);
    UnitaryTuple block{a.weight(), part, {}};
    ComplexMatrix w = report.conjugator.middleCols(offset, part);
    for (int j = 0; j < t.n; ++j)
      if (a.bit(j)) block.matrices.push_back(w.adjoint() * t.matrices[j] * w);
    out.blocks.push_back(TupleBlock{a, std::move(block)});
    offset += part;
  }
  return out;
}

std::vector<ComplexMatrix> shuffle(const BinarySequence& a,
                                   const std::vector<ComplexMatrix>& block,
                                   int block_rank) {
  if (static_cast<int>(block.size()) != a.weight())
    throw DimensionError("shuffle: block tuple length must equal |a|");
  std::vector<ComplexMatrix> out(a.arity(),
                                 ComplexMatrix::Identity(block_rank, block_rank));
  int next = 0;
  for (int i = 0; i < a.arity(); ++i)
    if (a.bit(i)) out[i] = block[next++];
  return out;
}

UnitaryTuple reassemble(const BlockDecomposition& d) {
  const int m = d.partition.rank();
  const int n = d.partition.arity();
  UnitaryTuple t{n, m, std::vector<ComplexMatrix>(n, ComplexMatrix::Zero(m, m))};
  int offset = 0;
  for (const auto& blk : d.blocks) {
    std::vector<ComplexMatrix> full =
        shuffle(blk.index, blk.tuple.matrices, blk.tuple.m);
    for (int j = 0; j < n; ++j)
      t.matrices[j].block(offset, offset, blk.tuple.m, blk.tuple.m) = full[j];
    offset += blk.tuple.m;
  }
  for (auto& u : t.matrices) u = d.conjugator * u * d.conjugator.adjoint();
  return t;
}

std::vector<IndexedPartition> closure_probe(
    const IndexedPartition& lambda, int steps, uint64_t seed,
    const Tolerances& tol,
    const std::optional<std::vector<std::pair<int, int>>>& entries) {
  if (steps < 0) throw DomainError("closure_probe requires steps >= 0");
  check_tolerances(tol);
  const int n = lambda.arity();
  const int m = lambda.rank();
  PatternMatrix pattern = pattern_matrix(lambda);

  // Sample the angles exactly as random_torus_tuple does.
  Rng rng(seed);
  const double theta_min = 2.0 * std::asin(tol.margin / 2.0);
  Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (pattern.rows[i].bit(j))
        theta(i, j) = theta_min + rng.uniform() * (kTwoPi - 2.0 * theta_min);

  std::vector<std::pair<int, int>> flowing;
  if (entries) {
    for (auto [i, j] : *entries) {
      if (i < 0 || i >= m || j < 0 || j >= n)
        throw DimensionError("closure_probe entry out of range");
      if (!pattern.rows[i].bit(j))
        throw DomainError("closure_probe entry (" + std::to_string(i) + "," +
                          std::to_string(j) + ") is already 1");
      flowing.emplace_back(i, j);
    }
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (pattern.rows[i].bit(j)) flowing.emplace_back(i, j);
  }

  std::vector<IndexedPartition> chain;
  for (int s = 0; s <= steps; ++s) {
    double factor = steps == 0 ? 1.0 : 1.0 - static_cast<double>(s) / steps;
    UnitaryTuple t{n, m,
                   std::vector<ComplexMatrix>(n, ComplexMatrix::Identity(m, m))};
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (pattern.rows[i].bit(j))
          t.matrices[j](i, i) = std::polar(1.0, theta(i, j));
    for (auto [i, j] : flowing)
      t.matrices[j](i, i) = std::polar(1.0, theta(i, j) * factor);
    chain.push_back(classify(t, seed, tol).partition);
  }
  return chain;
}

}  // namespace commsplit
