#include "commsplit/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "commsplit/errors.hpp"

namespace commsplit {

std::string to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::Unitary: return "U";
    case GroupKind::Symplectic: return "Sp";
    case GroupKind::OrthogonalOdd: return "SOodd";
    case GroupKind::OrthogonalEven: return "SOeven";
  }
  return "?";
}

int GroupFamily::dim() const {
  switch (kind) {
    case GroupKind::Unitary: return rank * rank;
    case GroupKind::Symplectic: return rank * (2 * rank + 1);
    case GroupKind::OrthogonalOdd: return rank * (2 * rank + 1);
    case GroupKind::OrthogonalEven: return rank * (2 * rank - 1);
  }
  return 0;
}

Integer GroupFamily::weyl_order() const {
  Integer f = factorial(rank);
  switch (kind) {
    case GroupKind::Unitary: return f;
    case GroupKind::Symplectic:
    case GroupKind::OrthogonalOdd: return (Integer(1) << rank) * f;
    case GroupKind::OrthogonalEven: return (Integer(1) << (rank - 1)) * f;
  }
  return f;
}

std::vector<int> GroupFamily::invariant_degrees() const {
  std::vector<int> d;
  switch (kind) {
    case GroupKind::Unitary:
      for (int i = 1; i <= rank; ++i) d.push_back(i);
      break;
    case GroupKind::Symplectic:
    case GroupKind::OrthogonalOdd:
      for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
      break;
    case GroupKind::OrthogonalEven:
      for (int i = 1; i <= rank - 1; ++i) d.push_back(2 * i);
      d.push_back(rank);
      break;
  }
  return d;
}

std::string GroupFamily::name() const {
  std::ostringstream out;
  switch (kind) {
    case GroupKind::Unitary: out << "U(" << rank << ")"; break;
    case GroupKind::Symplectic: out << "Sp(" << rank << ")"; break;
    case GroupKind::OrthogonalOdd: out << "SO(" << 2 * rank + 1 << ")"; break;
    case GroupKind::OrthogonalEven: out << "SO(" << 2 * rank << ")"; break;
  }
  return out.str();
}

int CycleClass::total() const {
  return std::accumulate(positive_cycles.begin(), positive_cycles.end(), 0) +
         std::accumulate(negative_cycles.begin(), negative_cycles.end(), 0);
}

std::string CycleClass::to_string() const {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < positive_cycles.size(); ++i)
    out << (i ? "," : "") << positive_cycles[i];
  out << "|";
  for (size_t i = 0; i < negative_cycles.size(); ++i)
    out << (i ? "," : "") << negative_cycles[i];
  out << ")";
  return out.str();
}

std::vector<std::vector<int>> integer_partitions(int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      self(self, remaining - p, p);
      current.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

Integer symmetric_class_size(int k, const std::vector<int>& cycles) {
  std::map<int, int> mult;
  for (int l : cycles) ++mult[l];
  Integer centralizer = 1;
  for (auto [l, c] : mult) {
    for (int i = 0; i < c; ++i) centralizer *= l;
    centralizer *= factorial(c);
  }
  return factorial(k) / centralizer;
}

namespace {

Integer hyperoctahedral_centralizer(const std::vector<int>& cycles) {
  std::map<int, int> mult;
  for (int l : cycles) ++mult[l];
  Integer z = 1;
  for (auto [l, c] : mult) {
    for (int i = 0; i < c; ++i) z *= 2 * l;
    z *= factorial(c);
  }
  return z;
}

std::vector<CycleClass> symmetric_classes(int m) {
  std::vector<CycleClass> out;
  for (auto& cycles : integer_partitions(m)) {
    CycleClass c;
    c.positive_cycles = cycles;
    c.negative_cycles = {};
    c.class_size = symmetric_class_size(m, cycles);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CycleClass> hyperoctahedral_classes(int m) {
  std::vector<CycleClass> out;
  const Integer order = (Integer(1) << m) * factorial(m);
  for (int pos = m; pos >= 0; --pos)
    for (auto& alpha : integer_partitions(pos))
      for (auto& beta : integer_partitions(m - pos)) {
        CycleClass c;
        c.positive_cycles = alpha;
        c.negative_cycles = beta;
        c.class_size = order / (hyperoctahedral_centralizer(alpha) *
                                hyperoctahedral_centralizer(beta));
        out.push_back(std::move(c));
      }
  return out;
}

// --- brute-force path for the even orthogonal Weyl group D_m ---
//
// A signed permutation is stored as img[i] = +-(j+1): e_i maps to sign * e_j.

using SignedPerm = std::vector<int>;

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

CycleClass signed_cycle_type(const SignedPerm& u) {
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
  auto desc = [](std::vector<int>& v) { std::sort(v.rbegin(), v.rend()); };
  desc(c.positive_cycles);
  desc(c.negative_cycles);
  return c;
}

std::vector<CycleClass> even_orthogonal_classes(int m, int bound) {
  if (m > bound)
    throw CapacityError("SO(2m) class enumeration is brute force; rank " +
                        std::to_string(m) + " exceeds the bound " +
                        std::to_string(bound));
  if (m == 1) {
    CycleClass id;
    id.positive_cycles = {1};
    id.class_size = 1;
    return {id};
  }
  // Enumerate the index-2 subgroup: even number of minus signs.
  std::vector<SignedPerm> elements;
  std::vector<int> base(m);
  std::iota(base.begin(), base.end(), 1);
  std::vector<int> perm = base;
  do {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      if (std::popcount(mask) % 2) continue;
      SignedPerm u(m);
      for (int i = 0; i < m; ++i)
        u[i] = (mask >> i & 1u) ? -perm[i] : perm[i];
      elements.push_back(std::move(u));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::map<SignedPerm, int> index;
  for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);

  // Generators: adjacent transpositions and the sign-flipping transposition.
  std::vector<SignedPerm> gens;
  for (int i = 0; i + 1 < m; ++i) {
    SignedPerm s(base.begin(), base.end());
    std::swap(s[i], s[i + 1]);
    gens.push_back(std::move(s));
  }
  {
    SignedPerm s(base.begin(), base.end());
    s[0] = -2;
    s[1] = -1;
    gens.push_back(std::move(s));
  }

  // Conjugation orbits = conjugacy classes.
  std::vector<int> orbit_of(elements.size(), -1);
  std::vector<CycleClass> classes;
  for (size_t start = 0; start < elements.size(); ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    std::vector<int> queue{static_cast<int>(start)};
    orbit_of[start] = id;
    Integer size = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      ++size;
      const SignedPerm& w = elements[queue[qi]];
      for (const auto& gen : gens) {
        SignedPerm conj = compose(compose(gen, w), inverse(gen));
        int j = index.at(conj);
        if (orbit_of[j] < 0) {
          orbit_of[j] = id;
          queue.push_back(j);
        }
      }
    }
    CycleClass c = signed_cycle_type(elements[start]);
    c.class_size = size;
    classes.push_back(std::move(c));
  }
  // Deterministic order: by cycle type; split classes stay adjacent.
  std::stable_sort(classes.begin(), classes.end(),
                   [](const CycleClass& a, const CycleClass& b) {
                     if (a.positive_cycles != b.positive_cycles)
                       return a.positive_cycles > b.positive_cycles;
                     return a.negative_cycles > b.negative_cycles;
                   });
  return classes;
}

void check_class(const GroupFamily& g, const CycleClass& w) {
  if (w.total() != g.rank)
    throw DomainError("cycle class of total " + std::to_string(w.total()) +
                      " does not belong to " + g.name());
  if (g.kind == GroupKind::Unitary && !w.negative_cycles.empty())
    throw DomainError("unitary Weyl group has no negative cycles");
}

}  // namespace

std::vector<CycleClass> conjugacy_classes(const GroupFamily& g,
                                          int even_orthogonal_bound) {
  if (g.rank < 1) throw DomainError("conjugacy_classes requires rank >= 1");
  static std::map<std::pair<GroupKind, int>, std::vector<CycleClass>> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({g.kind, g.rank});
    if (it != cache.end()) return it->second;
  }
  std::vector<CycleClass> classes;
  switch (g.kind) {
    case GroupKind::Unitary:
      classes = symmetric_classes(g.rank);
      break;
    case GroupKind::Symplectic:
    case GroupKind::OrthogonalOdd:
      classes = hyperoctahedral_classes(g.rank);
      break;
    case GroupKind::OrthogonalEven:
      classes = even_orthogonal_classes(g.rank, even_orthogonal_bound);
      break;
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache[{g.kind, g.rank}] = classes;
  return classes;
}

GradedTrace coinvariant_trace(const GroupFamily& g, const CycleClass& w) {
  check_class(g, w);
  Polynomial num = Polynomial::one();
  for (int d : g.invariant_degrees())
    num = num * (Polynomial::one() - Polynomial::monomial(2 * d));
  Polynomial den = Polynomial::one();
  for (int l : w.positive_cycles)
    den = den * (Polynomial::one() - Polynomial::monomial(2 * l));
  for (int l : w.negative_cycles)
    den = den * (Polynomial::one() + Polynomial::monomial(2 * l));
  return GradedTrace{std::move(num), std::move(den)};
}

Polynomial torus_exterior_trace(const GroupFamily& g, const CycleClass& w, int n) {
  check_class(g, w);
  if (n < 0) throw DomainError("torus_exterior_trace requires n >= 0");
  Polynomial det = Polynomial::one();
  for (int l : w.positive_cycles) {
    // 1 - (-t)^l
    Polynomial term = Polynomial::one() -
                      Polynomial::monomial(l, Rational(l % 2 ? -1 : 1));
    det = det * term;
  }
  for (int l : w.negative_cycles) {
    // 1 + (-t)^l
    Polynomial term = Polynomial::one() +
                      Polynomial::monomial(l, Rational(l % 2 ? -1 : 1));
    det = det * term;
  }
  return det.pow(n);
}

int det_character(const CycleClass& w) {
  int sign = 1;
  for (int l : w.positive_cycles)
    if ((l - 1) % 2) sign = -sign;
  for (int l : w.negative_cycles)
    if (l % 2) sign = -sign;
  return sign;
}

GroupKind block_kind(GroupKind family_kind) {
  switch (family_kind) {
    case GroupKind::Unitary: return GroupKind::Unitary;
    case GroupKind::Symplectic: return GroupKind::Symplectic;
    default:
      throw UnsupportedError("block decomposition data only exists for U and Sp");
  }
}

std::vector<CycleClass> block_conjugacy_classes(GroupKind family_kind, int k) {
  if (k == 0) {
    CycleClass empty;
    empty.class_size = 1;
    return {empty};
  }
  switch (block_kind(family_kind)) {
    case GroupKind::Unitary: return symmetric_classes(k);
    default: return hyperoctahedral_classes(k);
  }
}

Integer block_weyl_order(GroupKind family_kind, int k) {
  switch (block_kind(family_kind)) {
    case GroupKind::Unitary: return factorial(k);
    default: return (Integer(1) << k) * factorial(k);
  }
}

int block_dim(GroupKind family_kind, int k) {
  switch (block_kind(family_kind)) {
    case GroupKind::Unitary: return k * k;
    default: return k * (2 * k + 1);
  }
}

}  // namespace commsplit
