#include "commsplit/poset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "commsplit/errors.hpp"

namespace commsplit {

namespace {

void check_arity(int n) {
  if (n < 1) throw CapacityError("arity must be at least 1");
  if (n > kMaxArity)
    throw CapacityError("arity " + std::to_string(n) +
                        " exceeds the 2^n capacity bound");
}

}  // namespace

BinarySequence::BinarySequence(int n, unsigned code) : n_(n), code_(code) {
  if (n < 0 || n > kMaxArity) throw CapacityError("binary sequence arity out of range");
  if (n < 32 && code >= (1u << n))
    throw DimensionError("binary sequence code out of range for arity");
}

BinarySequence BinarySequence::from_bits(const std::vector<int>& bits) {
  unsigned code = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("binary sequence bit must be 0 or 1");
    code = (code << 1) | static_cast<unsigned>(b);
  }
  return BinarySequence(static_cast<int>(bits.size()), code);
}

int BinarySequence::bit(int i) const {
  if (i < 0 || i >= n_) throw DimensionError("binary sequence coordinate out of range");
  return (code_ >> (n_ - 1 - i)) & 1u;
}

int BinarySequence::weight() const { return std::popcount(code_); }

bool BinarySequence::below(const BinarySequence& o) const {
  if (n_ != o.n_) throw DimensionError("binary sequences of different arity");
  return (code_ & o.code_) == code_;
}

std::string BinarySequence::to_string() const {
  std::string s(n_, '0');
  for (int i = 0; i < n_; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

IndexedPartition::IndexedPartition(int n, std::vector<int> parts)
    : n_(n), parts_(std::move(parts)) {
  check_arity(n);
  if (parts_.size() != (1u << n_))
    throw DimensionError("partition must have exactly 2^n parts");
  m_ = 0;
  for (int p : parts_) {
    if (p < 0) throw DomainError("partition parts must be non-negative");
    m_ += p;
  }
}

int IndexedPartition::part(const BinarySequence& a) const {
  if (a.arity() != n_) throw DimensionError("sequence arity does not match partition");
  return parts_[a.code()];
}

int IndexedPartition::part(unsigned code) const {
  if (code >= parts_.size()) throw DimensionError("sequence code out of range");
  return parts_[code];
}

BinarySequence IndexedPartition::sequence(unsigned code) const {
  return BinarySequence(n_, code);
}

std::string IndexedPartition::to_string() const {
  std::ostringstream out;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << "|";
    out << parts_[i];
  }
  return out.str();
}

IndexedPartition IndexedPartition::concentrated(int n, int m,
                                                const BinarySequence& a) {
  check_arity(n);
  if (a.arity() != n) throw DimensionError("sequence arity does not match");
  std::vector<int> parts(1u << n, 0);
  parts[a.code()] = m;
  return IndexedPartition(n, std::move(parts));
}

IndexedPartition IndexedPartition::bottom(int n, int m) {
  return concentrated(n, m, BinarySequence(n, 0));
}

IndexedPartition IndexedPartition::top(int n, int m) {
  return concentrated(n, m, BinarySequence(n, (1u << n) - 1));
}

PatternMatrix pattern_matrix(const IndexedPartition& lambda) {
  PatternMatrix mat;
  mat.n = lambda.arity();
  mat.rows.reserve(lambda.rank());
  for (unsigned code = 0; code < static_cast<unsigned>(lambda.size()); ++code)
    for (int c = 0; c < lambda.part(code); ++c)
      mat.rows.emplace_back(lambda.arity(), code);
  return mat;
}

IndexedPartition PatternMatrix::to_partition() const {
  std::vector<int> parts(1u << n, 0);
  for (const auto& row : rows) {
    if (row.arity() != n) throw DimensionError("pattern matrix rows of mixed arity");
    ++parts[row.code()];
  }
  return IndexedPartition(n, std::move(parts));
}

Integer count_partitions(int n, int m) {
  check_arity(n);
  if (m < 0) throw DomainError("rank must be non-negative");
  const long long blocks = 1ll << n;
  return binomial(static_cast<int>(m + blocks - 1), static_cast<int>(blocks - 1));
}

std::vector<IndexedPartition> enumerate_partitions(int n, int m) {
  check_arity(n);
  if (m < 0) throw DomainError("rank must be non-negative");
  if (count_partitions(n, m) > 5'000'000)
    throw CapacityError("poset of " + count_partitions(n, m).str() +
                        " partitions exceeds enumeration capacity");
  const size_t blocks = 1u << n;
  std::vector<IndexedPartition> out;
  std::vector<int> parts(blocks, 0);
  // Depth-first with the current block taking the largest remainder first.
  auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
    if (idx + 1 == blocks) {
      parts[idx] = remaining;
      out.emplace_back(n, parts);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      parts[idx] = v;
      self(self, idx + 1, remaining - v);
    }
    parts[idx] = 0;
  };
  rec(rec, 0, m);
  return out;
}

namespace {

// Hopcroft-Karp maximum matching on the row-dominance bipartite graph.
class RowMatcher {
 public:
  RowMatcher(const PatternMatrix& mu, const PatternMatrix& lam) {
    left_ = static_cast<int>(mu.rows.size());
    right_ = static_cast<int>(lam.rows.size());
    adj_.resize(left_);
    for (int i = 0; i < left_; ++i)
      for (int j = 0; j < right_; ++j)
        if (mu.rows[i].below(lam.rows[j])) adj_[i].push_back(j);
  }

  bool has_perfect_matching() {
    match_left_.assign(left_, -1);
    match_right_.assign(right_, -1);
    int matched = 0;
    while (true) {
      if (!bfs()) break;
      for (int i = 0; i < left_; ++i)
        if (match_left_[i] < 0 && dfs(i)) ++matched;
    }
    return matched == left_;
  }

 private:
  static constexpr int kInf = 1 << 29;

  bool bfs() {
    std::vector<int> queue;
    dist_.assign(left_, kInf);
    for (int i = 0; i < left_; ++i)
      if (match_left_[i] < 0) {
        dist_[i] = 0;
        queue.push_back(i);
      }
    bool reachable = false;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int i = queue[qi];
      for (int j : adj_[i]) {
        int k = match_right_[j];
        if (k < 0) {
          reachable = true;
        } else if (dist_[k] == kInf) {
          dist_[k] = dist_[i] + 1;
          queue.push_back(k);
        }
      }
    }
    return reachable;
  }

  bool dfs(int i) {
    for (int j : adj_[i]) {
      int k = match_right_[j];
      if (k < 0 || (dist_[k] == dist_[i] + 1 && dfs(k))) {
        match_left_[i] = j;
        match_right_[j] = i;
        return true;
      }
    }
    dist_[i] = kInf;
    return false;
  }

  int left_ = 0, right_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_left_, match_right_, dist_;
};

}  // namespace

bool leq(const IndexedPartition& mu, const IndexedPartition& lambda) {
  if (mu.arity() != lambda.arity() || mu.rank() != lambda.rank())
    throw DimensionError("leq requires partitions of the same (n, m)");
  RowMatcher matcher(pattern_matrix(mu), pattern_matrix(lambda));
  return matcher.has_perfect_matching();
}

std::vector<IndexedPartition> down_set(const IndexedPartition& lambda) {
  std::vector<IndexedPartition> out;
  for (auto& mu : enumerate_partitions(lambda.arity(), lambda.rank()))
    if (leq(mu, lambda)) out.push_back(std::move(mu));
  return out;
}

HasseDiagram hasse(int n, int m) {
  HasseDiagram diagram;
  diagram.elements = enumerate_partitions(n, m);
  const int count = static_cast<int>(diagram.elements.size());
  const int words = (count + 63) / 64;
  // Strict order as bitsets: up[i] holds indices strictly above i, down[j]
  // those strictly below j. Cover test is then one intersection per pair.
  std::vector<std::vector<uint64_t>> up(count, std::vector<uint64_t>(words, 0));
  std::vector<std::vector<uint64_t>> down(count, std::vector<uint64_t>(words, 0));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j)
      if (i != j && leq(diagram.elements[i], diagram.elements[j])) {
        up[i][j >> 6] |= 1ull << (j & 63);
        down[j][i >> 6] |= 1ull << (i & 63);
      }
  for (int i = 0; i < count; ++i)
    for (int j = 0; j < count; ++j) {
      if (!(up[i][j >> 6] >> (j & 63) & 1ull)) continue;
      bool between = false;
      for (int w = 0; w < words && !between; ++w)
        between = (up[i][w] & down[j][w]) != 0;
      if (!between) diagram.edges.emplace_back(i, j);
    }
  return diagram;
}

int weight(const IndexedPartition& lambda) {
  int total = 0;
  for (unsigned code = 0; code < static_cast<unsigned>(lambda.size()); ++code)
    total += lambda.part(code) * std::popcount(code);
  return total;
}

bool in_S(const IndexedPartition& lambda) {
  for (int i = 0; i < lambda.arity(); ++i) {
    int column = 0;
    for (unsigned code = 0; code < static_cast<unsigned>(lambda.size()); ++code)
      column += lambda.part(code) * ((code >> (lambda.arity() - 1 - i)) & 1u);
    if (column == 0) return false;
  }
  return true;
}

std::vector<int> inverted_primes(const IndexedPartition& lambda) {
  int bound = 0;
  for (unsigned code = 0; code < static_cast<unsigned>(lambda.size()); ++code)
    if (std::popcount(code) > 1) bound = std::max(bound, lambda.part(code));
  return primes_up_to(bound);
}

}  // namespace commsplit
