#pragma once

#include <vector>

#include "commsplit/polynomial.hpp"

namespace commsplit {

/// Mod-p Poincare series of the unordered complete flag manifold U(p)/N:
/// 1 + (t^{2p-3} + t^{2p-2}) * prod_{k=1}^{p-2} (1 + t^{2k-1}).
/// Valid for every prime, including p = 2 where U(2)/N is RP^2.
Polynomial flag_unordered_series(long long p);

/// Degrees of the additive basis {1, alpha_S, gamma_S : S subset {1..p-2}}
/// of H*(U(p)/N; F_p) for odd p, as a sorted multiset:
/// |alpha_S| = 2p-3 + sum_{i in S}(2i-1), |gamma_S| = |alpha_S| + 1.
std::vector<int> guerra_jana_degrees(long long p);

/// Whether the mod-p Euler class of the sphere bundle over U(p)/N vanishes
/// for even arity n: false for n = 2, true for even n > 2.
bool euler_class_vanishes(int n);

/// Mod-p series of the compactified commuting variety of u_p for even
/// n >= 4, assembled from the Gysin sequence of the sphere bundle:
/// 1 + t^{n+1} * reduced_flag + t^{np} * flag.
Polynomial cnup_modp_gysin(long long p, int n);

/// The same series as the literal closed formula:
/// 1 + t^{np} + (t^{n+1} + t^{np})(t^{2p-3} + t^{2p-2}) prod (1 + t^{2k-1}).
Polynomial cnup_modp_closed(long long p, int n);

/// dim_{F_p} H^{2p} of the compactified commuting pair variety of u_p.
int h2p_c2_rank(long long p);

}  // namespace commsplit
