#pragma once

#include <string>
#include <utility>
#include <vector>

#include "commsplit/numeric.hpp"

namespace commsplit {

// Enumeration bounds. Arity 2^n must stay well inside the int range; the
// partition count explodes long before this limit is reached.
inline constexpr int kMaxArity = 30;

/// A binary sequence a in {0,1}^n, totally ordered lexicographically with
/// (0,...,0) minimal. The packed code keeps coordinate 0 in the most
/// significant bit, so the lexicographic order is the numeric order on codes.
class BinarySequence {
 public:
  BinarySequence(int n, unsigned code);
  static BinarySequence from_bits(const std::vector<int>& bits);

  int arity() const { return n_; }
  unsigned code() const { return code_; }
  int bit(int i) const;  // coordinate i, 0-based
  int weight() const;    // |a|

  /// Coordinatewise dominance: every set bit of *this is set in o.
  bool below(const BinarySequence& o) const;

  bool operator==(const BinarySequence& o) const {
    return n_ == o.n_ && code_ == o.code_;
  }
  bool operator<(const BinarySequence& o) const { return code_ < o.code_; }

  std::string to_string() const;  // e.g. "01"

 private:
  int n_;
  unsigned code_;
};

/// An I-indexed ordered partition of m into 2^n labelled non-negative parts.
/// Zero parts are stored explicitly.
class IndexedPartition {
 public:
  IndexedPartition(int n, std::vector<int> parts);

  int arity() const { return n_; }
  int rank() const { return m_; }
  int size() const { return static_cast<int>(parts_.size()); }  // 2^n
  int part(const BinarySequence& a) const;
  int part(unsigned code) const;
  const std::vector<int>& parts() const { return parts_; }
  BinarySequence sequence(unsigned code) const;

  bool operator==(const IndexedPartition& o) const {
    return n_ == o.n_ && parts_ == o.parts_;
  }
  bool operator!=(const IndexedPartition& o) const { return !(*this == o); }

  /// Parts in I-order joined by '|', e.g. "1|1|2|2".
  std::string to_string() const;

  static IndexedPartition concentrated(int n, int m, const BinarySequence& a);
  static IndexedPartition bottom(int n, int m);
  static IndexedPartition top(int n, int m);

 private:
  int n_;
  int m_;
  std::vector<int> parts_;
};

/// The m x n 0/1 matrix M(lambda): lambda_a copies of row a, blocks in
/// increasing lexicographic order of a.
struct PatternMatrix {
  int n = 0;
  std::vector<BinarySequence> rows;

  IndexedPartition to_partition() const;
};

PatternMatrix pattern_matrix(const IndexedPartition& lambda);

Integer count_partitions(int n, int m);

/// All partitions of m into 2^n labelled parts. Canonical order: the part
/// vector read in I-order, larger first parts first, so for n = 1 the list
/// runs (m,0), (m-1,1), ..., (0,m).
std::vector<IndexedPartition> enumerate_partitions(int n, int m);

/// mu <= lambda iff some bijection matches every row of M(mu) to a
/// coordinatewise-greater-or-equal row of M(lambda). Decided by maximum
/// bipartite matching, never by enumerating row permutations.
bool leq(const IndexedPartition& mu, const IndexedPartition& lambda);

std::vector<IndexedPartition> down_set(const IndexedPartition& lambda);

struct HasseDiagram {
  std::vector<IndexedPartition> elements;  // canonical enumeration order
  std::vector<std::pair<int, int>> edges;  // (child index, parent index)
};

/// Cover relations of the full poset: transitive reduction of leq.
HasseDiagram hasse(int n, int m);

/// f(lambda) = sum over a of lambda_a * |a|; monotone for leq.
int weight(const IndexedPartition& lambda);

/// Membership in S: every coordinate column of M(lambda) contains a 1.
bool in_S(const IndexedPartition& lambda);

/// Primes p <= max{lambda_a : |a| > 1}; empty when that max is <= 1.
std::vector<int> inverted_primes(const IndexedPartition& lambda);

}  // namespace commsplit
