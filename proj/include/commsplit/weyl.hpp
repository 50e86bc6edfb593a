#pragma once

#include <string>
#include <vector>

#include "commsplit/numeric.hpp"
#include "commsplit/polynomial.hpp"

namespace commsplit {

enum class GroupKind { Unitary, Symplectic, OrthogonalOdd, OrthogonalEven };

std::string to_string(GroupKind kind);

/// One of the supported compact-group families at a fixed rank:
/// U(m), Sp(m), SO(2m+1) or SO(2m).
struct GroupFamily {
  GroupKind kind;
  int rank;  // m

  static GroupFamily unitary(int m) { return {GroupKind::Unitary, m}; }
  static GroupFamily symplectic(int m) { return {GroupKind::Symplectic, m}; }
  static GroupFamily orthogonal_odd(int m) { return {GroupKind::OrthogonalOdd, m}; }
  static GroupFamily orthogonal_even(int m) { return {GroupKind::OrthogonalEven, m}; }

  int dim() const;
  Integer weyl_order() const;
  /// Degrees of the basic Weyl invariants, e.g. 1..m for U(m).
  std::vector<int> invariant_degrees() const;
  std::string name() const;  // "U(2)", "Sp(3)", "SO(5)", "SO(4)"

  bool operator==(const GroupFamily& o) const {
    return kind == o.kind && rank == o.rank;
  }
};

/// Conjugacy class of a (signed) permutation group, described by its signed
/// cycle type. Unitary-family classes carry no negative cycles.
struct CycleClass {
  std::vector<int> positive_cycles;  // multiset of lengths, sorted descending
  std::vector<int> negative_cycles;
  Integer class_size = 1;

  int total() const;
  std::string to_string() const;  // e.g. "(2,1|1)"
};

/// Ratio of polynomials kept unreduced; denominators always have nonzero
/// constant term. Division to a genuine polynomial happens on demand.
struct GradedTrace {
  Polynomial numerator;
  Polynomial denominator;

  Polynomial to_polynomial(const std::string& context) const {
    return divide_exact(numerator, denominator, context);
  }
};

inline constexpr int kDefaultEvenOrthogonalBound = 6;

/// Conjugacy classes of the Weyl group of g. Closed-form class data for
/// the symmetric and hyperoctahedral cases; brute force for SO(2m), where a
/// type can split into two classes of equal size.
std::vector<CycleClass> conjugacy_classes(
    const GroupFamily& g, int even_orthogonal_bound = kDefaultEvenOrthogonalBound);

/// Graded character of w on the coinvariant algebra with generators in
/// degree 2: prod_i (1 - t^{2 d_i}) / det_V(1 - t^2 w). Always divides
/// exactly; to_polynomial checks.
GradedTrace coinvariant_trace(const GroupFamily& g, const CycleClass& w);

/// Graded trace of w on H*(T^n) = Lambda(m degree-1 classes)^{tensor n},
/// i.e. det(1 + t w)^n.
Polynomial torus_exterior_trace(const GroupFamily& g, const CycleClass& w, int n);

/// Determinant of w on the (signed) permutation representation.
int det_character(const CycleClass& w);

/// Integer partitions of k, each sorted descending; ordered
/// lexicographically descending starting from (k).
std::vector<std::vector<int>> integer_partitions(int k);

/// Centralizer-order based class size of a cycle type in Sigma_k.
Integer symmetric_class_size(int k, const std::vector<int>& cycles);

// Block-group helpers used by the summand series: Weyl data of U(k)/Sp(k)
// blocks inside a larger family.
GroupKind block_kind(GroupKind family_kind);
std::vector<CycleClass> block_conjugacy_classes(GroupKind family_kind, int k);
Integer block_weyl_order(GroupKind family_kind, int k);
int block_dim(GroupKind family_kind, int k);

}  // namespace commsplit
