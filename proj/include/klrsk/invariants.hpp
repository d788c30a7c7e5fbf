/**
 * @file invariants.hpp
 * @brief Counting invariants of permissible pairs and RSK transforms:
 *        C, the nu-sets and D, kappa, the head shift Lambda-tilde, Lambda,
 *        and the normalisation shift d(m).
 */
#pragma once

#include "klrsk/rsk.hpp"

#include <utility>
#include <vector>

namespace klrsk {

/// #{(x, y) : b(x) = e(y) + 1} over segments x of m1 and y of m2, with multiplicity.
int c_count(const Multisegment& m1, const Multisegment& m2);

/// Index pairs refer to PermissiblePair::segs.
struct NuSets {
    std::vector<std::pair<int, int>> nu1;  ///< in I x I
    std::vector<std::pair<int, int>> nu2;  ///< in I x I
    std::vector<std::pair<int, int>> nu3;  ///< in I x J
};

NuSets nu_sets(const PermissiblePair& p);
/// |nu1| - |nu2| + |nu3|
int d_count(const PermissiblePair& p);
/// C(l, m) - D(l, m)
int kappa(const PermissiblePair& p);

/// |m| - C(l, m)
int lambda_tilde(const LadderMultisegment& l, const Multisegment& m);
/// 2 lambda_tilde - (wt l, wt m)
int64_t lambda_invariant(const LadderMultisegment& l, const Multisegment& m);

/// -sum_{i>=2} (i-1)|l_i| + sum_{i<j} C(l_i, l_j) over RSK(m).
int d_of_m(const Multisegment& m);
/// -sum_{i<j} Lambda-tilde(l_i, l_j) over RSK(m).
int d_by_lambda_tilde(const Multisegment& m);
/// -sum_i Lambda-tilde(l_i, m_i) with m_i the residual after i steps of K, negated
/// to match the sign of d_of_m.
int d_by_residuals(const Multisegment& m);
/// Tableau form: -sum_j l*_j (l*_j - 1) / 2 + #{c in an earlier row = d in a later row}.
int d_of_m_tableau(const TableauPair& t);
int d_of_m_tableau(const Multisegment& m);

/// Checks Lambda-tilde(L1, H) = sum_{j>=2} Lambda-tilde(L1, Lj) with H the K'-fold
/// of the tail, recursively down the sequence.
bool is_normal_sequence(const std::vector<LadderMultisegment>& ladders);

/// -sum_{i<j} Lambda-tilde(L_i, L_j)
int head_shift(const std::vector<LadderMultisegment>& ladders);

struct GammaDescriptor {
    std::vector<LadderMultisegment> factors;
    int shift = 0;  ///< d(m); the module is the product shifted by -d(m)
};

GammaDescriptor gamma_descriptor(const Multisegment& m);

} // namespace klrsk
