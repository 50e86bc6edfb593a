#pragma once

#include <utility>
#include <vector>

#include "commsplit/polynomial.hpp"
#include "commsplit/poset.hpp"
#include "commsplit/weyl.hpp"

// Independent reference implementations backing the self-test suite. Each
// one answers a question by direct enumeration or a textbook formula and
// must stay decoupled from the implementation path it checks.
namespace commsplit::oracles {

/// Order decision by trying every row permutation of M(lambda) and testing
/// coordinatewise dominance. Exponential; rank <= 8 or so.
bool brute_force_leq(const IndexedPartition& mu, const IndexedPartition& lambda);

/// Cover relations extracted from the brute-force order relation.
std::vector<std::pair<int, int>> brute_force_hasse_edges(
    const std::vector<IndexedPartition>& elements);

/// Poincare polynomial of the unitary group: prod_{i=1}^m (1 + t^{2i-1}).
Polynomial unitary_group_poincare(int m);

/// Reduced rational series of the stunted projective space
/// RP^{l+2}/RP^{l-1}, computed from its cellular chain complex with
/// boundary maps alternating between 0 and 2.
Polynomial stunted_projective_reduced_series(int l);

/// Conjugacy classes of the signed permutation group on m letters (or of
/// its even subgroup) by explicit conjugation orbits over all elements.
std::vector<CycleClass> brute_force_signed_classes(int m, bool even_only);

}  // namespace commsplit::oracles
