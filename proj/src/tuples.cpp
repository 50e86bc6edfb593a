#include "commsplit/tuples.hpp"

#include <cmath>
#include <sstream>

#include "commsplit/errors.hpp"

namespace commsplit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_shape(int n, int m, const std::vector<ComplexMatrix>& matrices,
                 const char* what) {
  if (n < 0 || m < 0 || matrices.size() != static_cast<size_t>(n))
    throw DimensionError(std::string(what) + ": matrix count does not match n");
  for (const auto& mat : matrices)
    if (mat.rows() != m || mat.cols() != m)
      throw DimensionError(std::string(what) + ": matrix is not m x m");
}

}  // namespace

void check_tolerances(const Tolerances& tol) {
  if (tol.unitary <= 0 || tol.commute <= 0 || tol.skew <= 0 || tol.one <= 0 ||
      tol.diagonal <= 0 || tol.singular <= 0 || tol.max_retries < 1)
    throw DomainError("tolerances must be strictly positive");
  if (tol.margin <= 0 || tol.margin >= 2.0)
    throw DomainError("generation margin must lie in (0, 2)");
  if (tol.one <= tol.diagonal)
    throw DomainError("eigenvalue-equals-1 tolerance must exceed the "
                      "diagonal residual floor");
}

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double unitarity_residual(const UnitaryTuple& t) {
  double r = 0.0;
  ComplexMatrix id = ComplexMatrix::Identity(t.m, t.m);
  for (const auto& u : t.matrices)
    r = std::max(r, max_abs(u.adjoint() * u - id));
  return r;
}

double skewness_residual(const SkewHermitianTuple& t) {
  double r = 0.0;
  for (const auto& x : t.matrices)
    r = std::max(r, max_abs(ComplexMatrix(x.adjoint() + x)));
  return r;
}

double commutator_residual(const std::vector<ComplexMatrix>& matrices) {
  double r = 0.0;
  for (size_t i = 0; i < matrices.size(); ++i)
    for (size_t j = i + 1; j < matrices.size(); ++j)
      r = std::max(r, max_abs(matrices[i] * matrices[j] -
                              matrices[j] * matrices[i]));
  return r;
}

void validate(const UnitaryTuple& t, const Tolerances& tol) {
  check_tolerances(tol);
  check_shape(t.n, t.m, t.matrices, "unitary tuple");
  double u = unitarity_residual(t);
  if (u > tol.unitary) {
    std::ostringstream msg;
    msg << "matrix is not unitary within tolerance (residual " << u << ")";
    throw ClassificationError(msg.str());
  }
  double c = commutator_residual(t.matrices);
  if (c > tol.commute) {
    std::ostringstream msg;
    msg << "tuple does not commute within tolerance (residual " << c << ")";
    throw ClassificationError(msg.str());
  }
}

void validate(const SkewHermitianTuple& t, const Tolerances& tol) {
  check_tolerances(tol);
  check_shape(t.n, t.m, t.matrices, "skew-Hermitian tuple");
  double s = skewness_residual(t);
  if (s > tol.skew) {
    std::ostringstream msg;
    msg << "matrix is not skew-Hermitian within tolerance (residual " << s << ")";
    throw ClassificationError(msg.str());
  }
  double c = commutator_residual(t.matrices);
  if (c > tol.commute) {
    std::ostringstream msg;
    msg << "tuple does not commute within tolerance (residual " << c << ")";
    throw ClassificationError(msg.str());
  }
}

double Rng::uniform() {
  return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = 1.0 - uniform();
  } while (u1 <= 0.0);
  double u2 = uniform();
  double radius = std::sqrt(-2.0 * std::log(u1));
  have_spare_ = true;
  spare_ = radius * std::sin(kTwoPi * u2);
  return radius * std::cos(kTwoPi * u2);
}

std::complex<double> Rng::complex_normal() {
  double re = normal();
  double im = normal();
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}

ComplexMatrix haar_unitary(int m, Rng& rng) {
  ComplexMatrix g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < m; ++i) {
    std::complex<double> d = r(i, i);
    double len = std::abs(d);
    q.col(i) *= len > 1e-300 ? d / len : 1.0;
  }
  return q;
}

UnitaryTuple random_torus_tuple(const IndexedPartition& lambda, uint64_t seed,
                                const Tolerances& tol) {
  check_tolerances(tol);
  Rng rng(seed);
  PatternMatrix pattern = pattern_matrix(lambda);
  const int n = lambda.arity();
  const int m = lambda.rank();
  UnitaryTuple t{n, m, std::vector<ComplexMatrix>(n, ComplexMatrix::Identity(m, m))};
  // Angles with |e^{i theta} - 1| >= margin: theta in [theta_min, 2pi - theta_min].
  const double theta_min = 2.0 * std::asin(tol.margin / 2.0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (pattern.rows[i].bit(j)) {
        double theta = theta_min + rng.uniform() * (kTwoPi - 2.0 * theta_min);
        t.matrices[j](i, i) = std::polar(1.0, theta);
      }
  return t;
}

UnitaryTuple random_commuting_tuple(const IndexedPartition& lambda,
                                    uint64_t seed, const Tolerances& tol) {
  UnitaryTuple t = random_torus_tuple(lambda, seed, tol);
  // Separate stream for the conjugator so the torus angles match the
  // diagonal generator at the same seed.
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  ComplexMatrix g = haar_unitary(t.m, rng);
  for (auto& u : t.matrices) u = g * u * g.adjoint();
  return t;
}

UnitaryTuple cayley(const SkewHermitianTuple& x, const Tolerances& tol) {
  validate(x, tol);
  ComplexMatrix id = ComplexMatrix::Identity(x.m, x.m);
  UnitaryTuple out{x.n, x.m, {}};
  out.matrices.reserve(x.n);
  for (const auto& mat : x.matrices)
    out.matrices.push_back((mat - id) * (mat + id).inverse());
  return out;
}

double cayley_condition_bound(const SkewHermitianTuple& x) {
  check_shape(x.n, x.m, x.matrices, "skew-Hermitian tuple");
  ComplexMatrix id = ComplexMatrix::Identity(x.m, x.m);
  double sigma = std::numeric_limits<double>::infinity();
  for (const auto& mat : x.matrices) {
    Eigen::JacobiSVD<ComplexMatrix> svd(mat + id);
    sigma = std::min(sigma, svd.singularValues().minCoeff());
  }
  if (x.n == 0) return 1.0;
  return 4.0 * x.m / (sigma * sigma * sigma * sigma);
}

SkewHermitianTuple cayley_inv(const UnitaryTuple& a, const Tolerances& tol) {
  validate(a, tol);
  ComplexMatrix id = ComplexMatrix::Identity(a.m, a.m);
  SkewHermitianTuple out{a.n, a.m, {}};
  out.matrices.reserve(a.n);
  for (size_t k = 0; k < a.matrices.size(); ++k) {
    const ComplexMatrix& mat = a.matrices[k];
    ComplexMatrix one_minus = id - mat;
    Eigen::JacobiSVD<ComplexMatrix> svd(one_minus);
    double sigma_min = svd.singularValues().minCoeff();
    if (sigma_min < tol.singular) {
      // Report the eigenvalue cluster at 1 for the offending matrix.
      Eigen::ComplexEigenSolver<ComplexMatrix> eig(mat, false);
      std::ostringstream msg;
      msg << "matrix " << k << " has eigenvalues too close to 1:";
      for (int i = 0; i < eig.eigenvalues().size(); ++i) {
        std::complex<double> ev = eig.eigenvalues()(i);
        if (std::abs(ev - 1.0) < 10.0 * tol.singular)
          msg << " " << ev.real() << (ev.imag() < 0 ? "-" : "+")
              << std::abs(ev.imag()) << "i";
      }
      throw SingularityError(msg.str());
    }
    out.matrices.push_back(one_minus.inverse() * (id + mat));
  }
  return out;
}

}  // namespace commsplit
