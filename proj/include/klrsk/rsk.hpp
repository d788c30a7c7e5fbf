/**
 * @file rsk.hpp
 * @brief Permissible pairs, the inverse Knuth map K', the forward map K, the
 *        RSK transform of a multisegment and its tableau pair.
 */
#pragma once

#include "klrsk/multisegment.hpp"

#include <vector>

namespace klrsk {

#ifdef NDEBUG
inline constexpr bool kVerifyRoundtrip = false;
#else
inline constexpr bool kVerifyRoundtrip = true;
#endif

/// True iff every ladder_less chain of `m` injects increasingly into `l` under
/// the shifted precedes relation. The zero multisegment is always permissible.
bool is_permissible(const LadderMultisegment& l, const Multisegment& m);

/**
 * @brief A permissible pair with all the bookkeeping of K'.
 *
 * Indices 0..body_size-1 are the body segments in the index order of I
 * (begin ascending, ties by end descending). Index body_size + t - 1 is the
 * ladder segment j_t, with j_1 the largest.
 */
struct PermissiblePair {
    LadderMultisegment ladder;
    Multisegment body;

    std::vector<Segment> segs;     ///< all of I then J
    int body_size = 0;
    std::vector<int> depth_prime;  ///< on I only
    std::vector<int> depth;        ///< on I and J
    std::vector<int> sigma;        ///< i -> i#
    std::vector<int> vee;          ///< i -> i-vee
    std::vector<Segment> club;     ///< [b(i), e(sigma(i))]

    int ladder_size() const noexcept { return static_cast<int>(segs.size()) - body_size; }
    bool in_body(int idx) const noexcept { return idx < body_size; }
    /// Index of j_t, t counted from 1.
    int j(int t) const noexcept { return body_size + t - 1; }
};

/// Throws NotPermissible if the pair fails the permissibility test.
PermissiblePair build_permissible(const LadderMultisegment& l, const Multisegment& m);

/// Depth by the min-over-chains definition; used to cross-check the recursion.
std::vector<int> depth_by_chains(const PermissiblePair& p);

/// Throws InvalidCertificate if any structural invariant of `p` fails.
void validate(const PermissiblePair& p);

Multisegment k_prime(const PermissiblePair& p);
Multisegment k_prime(const LadderMultisegment& l, const Multisegment& m);

struct KResult {
    LadderMultisegment ladder;
    Multisegment rest;
};

/// The map K. Throws ZeroMultisegment on 0; with `verify`, throws
/// InternalInconsistency unless K' recovers the input.
KResult k_forward(const Multisegment& m, bool verify = kVerifyRoundtrip);

/// Iterates K until the residual is a ladder; the result has width(m) entries.
std::vector<LadderMultisegment> rsk_transform(const Multisegment& m);

/// Inverse of rsk_transform: folds K' from the tail.
Multisegment from_rsk(const std::vector<LadderMultisegment>& ladders);

struct TableauPair {
    std::vector<int> shape;
    std::vector<std::vector<int>> P;  ///< begins c
    std::vector<std::vector<int>> Q;  ///< ends plus one d

    std::vector<int> conjugate() const;
    bool operator==(const TableauPair&) const = default;
};

TableauPair tableaux(const Multisegment& m);

/// Equal partition shapes, strictly decreasing rows, weakly decreasing columns.
bool is_inverted_semistandard(const TableauPair& t);

} // namespace klrsk
