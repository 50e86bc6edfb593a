#include "commsplit/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "commsplit/errors.hpp"

namespace commsplit::oracles {

bool brute_force_leq(const IndexedPartition& mu, const IndexedPartition& lambda) {
  if (mu.arity() != lambda.arity() || mu.rank() != lambda.rank())
    throw DimensionError("brute_force_leq requires matching (n, m)");
  PatternMatrix a = pattern_matrix(mu);
  PatternMatrix b = pattern_matrix(lambda);
  std::vector<int> perm(lambda.rank());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (int i = 0; i < mu.rank() && ok; ++i)
      ok = a.rows[i].below(b.rows[perm[i]]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::vector<std::pair<int, int>> brute_force_hasse_edges(
    const std::vector<IndexedPartition>& elements) {
  const int count = static_cast<int>(elements.size());
  std::vector<std::vector<bool>> strict(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j) strict[i][j] = brute_force_leq(elements[i], elements[j]);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (!strict[i][j]) continue;
      bool between = false;
      for (int k = 0; k < count && !between; ++k)
        between = strict[i][k] && strict[k][j];
      if (!between) edges.emplace_back(i, j);
    }
  return edges;
}

Polynomial unitary_group_poincare(int m) {
  Polynomial p = Polynomial::one();
  for (int i = 1; i <= m; ++i)
    p = p * (Polynomial::one() + Polynomial::monomial(2 * i - 1));
  return p;
}

Polynomial stunted_projective_reduced_series(int l) {
  if (l < 1) throw DomainError("stunted projective space needs l >= 1");
  // Cells of RP^{l+2}/RP^{l-1} in dimensions l..l+2; boundary of the k-cell
  // is multiplication by 1 + (-1)^k, and zero onto the collapsed skeleton.
  const int lo = l, hi = l + 2;
  auto boundary_rank = [&](int k) -> int {  // rank of d_k: C_k -> C_{k-1}
    if (k <= lo || k > hi) return 0;
    int factor = 1 + (k % 2 == 0 ? 1 : -1);  // 2 for even k, 0 for odd k
    return factor != 0 ? 1 : 0;
  };
  Polynomial series;
  for (int k = lo; k <= hi; ++k) {
    int kernel = 1 - boundary_rank(k);
    int image_from_above = boundary_rank(k + 1);
    int betti = kernel - image_from_above;
    if (betti < 0) throw ConsistencyError("stunted projective chain oracle");
    if (betti > 0) series += Polynomial::monomial(k, Rational(betti));
  }
  return series;
}

namespace {

using SignedPerm = std::vector<int>;  // img[i] = +-(j+1)

SignedPerm compose(const SignedPerm& u, const SignedPerm& v) {
  SignedPerm w(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    int s = v[i] > 0 ? 1 : -1;
    int j = std::abs(v[i]) - 1;
    w[i] = s * u[j];
  }
  return w;
}

SignedPerm inverse(const SignedPerm& u) {
  SignedPerm w(u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    int s = u[i] > 0 ? 1 : -1;
    int j = std::abs(u[i]) - 1;
    w[j] = s * static_cast<int>(i + 1);
  }
  return w;
}

CycleClass cycle_type(const SignedPerm& u) {
  CycleClass c;
  const int m = static_cast<int>(u.size());
  std::vector<bool> seen(m, false);
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int len = 0, sign = 1, j = i;
    do {
      seen[j] = true;
      ++len;
      sign *= u[j] > 0 ? 1 : -1;
      j = std::abs(u[j]) - 1;
    } while (j != i);
    (sign > 0 ? c.positive_cycles : c.negative_cycles).push_back(len);
  }
  std::sort(c.positive_cycles.rbegin(), c.positive_cycles.rend());
  std::sort(c.negative_cycles.rbegin(), c.negative_cycles.rend());
  return c;
}

}  // namespace

std::vector<CycleClass> brute_force_signed_classes(int m, bool even_only) {
  if (m < 1 || m > 5)
    throw CapacityError("brute-force signed classes limited to 1 <= m <= 5");
  std::vector<SignedPerm> elements;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (even_only && std::popcount(mask) % 2) continue;
      SignedPerm u(m);
      for (int i = 0; i < m; ++i)
        u[i] = (mask >> i & 1u) ? -perm[i] : perm[i];
      elements.push_back(std::move(u));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<SignedPerm, int> index;
  for (size_t i = 0; i < elements.size(); ++i)
    index[elements[i]] = static_cast<int>(i);

  std::vector<int> orbit(elements.size(), -1);
  std::vector<CycleClass> classes;
  for (size_t start = 0; start < elements.size(); ++start) {
    if (orbit[start] >= 0) continue;
    int id = static_cast<int>(classes.size());
    std::vector<int> queue{static_cast<int>(start)};
    orbit[start] = id;
    // Conjugate by every group element; slow and unambiguous.
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (const auto& g : elements) {
        SignedPerm conj = compose(compose(g, elements[queue[qi]]), inverse(g));
        int j = index.at(conj);
        if (orbit[j] < 0) {
          orbit[j] = id;
          queue.push_back(j);
        }
      }
    CycleClass c = cycle_type(elements[start]);
    c.class_size = static_cast<long long>(queue.size());
    classes.push_back(std::move(c));
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const CycleClass& a, const CycleClass& b) {
                     if (a.positive_cycles != b.positive_cycles)
                       return a.positive_cycles > b.positive_cycles;
                     return a.negative_cycles > b.negative_cycles;
                   });
  return classes;
}

}  // namespace commsplit::oracles
