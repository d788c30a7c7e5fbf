/**
 * @file multisegment.hpp
 * @brief Segments, multisegments and ladders on the integer line, with the
 *        order relations used by the RSK machinery.
 */
#pragma once

#include "klrsk/root_lattice.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace klrsk {

/// Interval [b, e] of simple roots; always b <= e.
struct Segment {
    int b = 0;
    int e = 0;

    Segment() = default;
    Segment(int begin, int end);

    int length() const noexcept { return e - b + 1; }
    /// The segment shifted one step to the left: [b-1, e-1].
    Segment shifted_left() const noexcept { return Segment(b - 1, e - 1); }
    RootVector weight() const { return RootVector::interval(b, e); }

    bool operator==(const Segment&) const = default;
    std::string to_string() const;
};

/// Lexicographic order on (b, e).
constexpr bool lex_less(const Segment& x, const Segment& y) noexcept
{
    return x.b < y.b || (x.b == y.b && x.e < y.e);
}

/// Right lexicographic order: compare ends first, then begins.
constexpr bool right_less(const Segment& x, const Segment& y) noexcept
{
    return x.e < y.e || (x.e == y.e && x.b < y.b);
}

/// x precedes y: b(x) < b(y), e(x) < e(y) and e(x) >= b(y) - 1.
constexpr bool precedes(const Segment& x, const Segment& y) noexcept
{
    return x.b < y.b && x.e < y.e && x.e >= y.b - 1;
}

constexpr bool is_linked(const Segment& x, const Segment& y) noexcept
{
    return precedes(x, y) || precedes(y, x);
}

/// Strict ladder order: both endpoints strictly smaller.
constexpr bool ladder_less(const Segment& x, const Segment& y) noexcept
{
    return x.b < y.b && x.e < y.e;
}

/**
 * @brief Finite formal sum of segments with positive multiplicities.
 *
 * Terms are kept sorted by the right lexicographic order with duplicates
 * merged, so two multisegments are equal iff their term lists are equal.
 */
class Multisegment {
public:
    using Term = std::pair<Segment, int>;

    Multisegment() = default;
    explicit Multisegment(const std::vector<Segment>& segments);
    explicit Multisegment(const std::vector<Term>& terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    /// Segments expanded by multiplicity, in right lexicographic order.
    std::vector<Segment> segments() const;

    bool empty() const noexcept { return terms_.empty(); }
    int size() const noexcept { return size_; }
    int multiplicity(const Segment& s) const;

    void add(const Segment& s, int mult = 1);
    Multisegment& operator+=(const Multisegment& other);
    Multisegment operator+(const Multisegment& other) const;

    RootVector weight() const;
    /// Sum of alpha_{b(segment)} over all segments.
    RootVector begins() const;
    /// Sum of alpha_{e(segment)} over all segments.
    RootVector ends() const;

    /// Same multisegment with every endpoint moved by `offset`.
    Multisegment translated(int offset) const;

    bool operator==(const Multisegment&) const = default;
    bool operator<(const Multisegment& o) const;

    /// Canonical text form, e.g. `2*[1,1]+[2,3]`; "0" for the empty sum.
    std::string to_string() const;

private:
    std::vector<Term> terms_;
    int size_ = 0;
};

/**
 * @brief A multisegment whose segments form a single strict chain under
 *        `ladder_less`, stored largest first.
 */
class LadderMultisegment {
public:
    /// Accepts segments in any order; throws MalformedLadder if they are not a chain.
    explicit LadderMultisegment(std::vector<Segment> segments);
    /// From begins lambda_1 > ... > lambda_k and ends-plus-one mu_1 > ... > mu_k.
    static LadderMultisegment from_lambda_mu(const std::vector<int>& lambda, const std::vector<int>& mu);

    /// Largest first: segments()[i] is ladder_less than segments()[i-1].
    const std::vector<Segment>& segments() const noexcept { return segs_; }
    int size() const noexcept { return static_cast<int>(segs_.size()); }

    std::vector<int> lambda() const;
    std::vector<int> mu() const;

    Multisegment to_multisegment() const { return Multisegment(segs_); }
    RootVector weight() const { return to_multisegment().weight(); }

    bool operator==(const LadderMultisegment&) const = default;
    std::string to_string() const { return to_multisegment().to_string(); }

private:
    std::vector<Segment> segs_;
};

/// Left-aligned block: common begin `a` and ends b_1 >= ... >= b_k.
struct LeftAlignedBlock {
    int a = 0;
    std::vector<int> ends;

    bool operator==(const LeftAlignedBlock&) const = default;
    Multisegment to_multisegment() const;
};

/// Minimum number of ladders summing to `m`; throws ZeroMultisegment on 0.
int width(const Multisegment& m);

/// Groups by begin point (ascending), each group's ends descending.
std::vector<LeftAlignedBlock> left_aligned_decomposition(const Multisegment& m);

/// The unique pairwise-unlinked multisegment of weight `beta`.
Multisegment spherical_multisegment(const RootVector& beta);

/// Some ladder if the segments form one strict chain, else nothing.
std::optional<LadderMultisegment> as_ladder(const Multisegment& m);

bool pairwise_unlinked(const Multisegment& m);

/// Every multisegment of the given weight (finite; exponential in height).
std::vector<Multisegment> multisegments_of_weight(const RootVector& beta);

/**
 * Parse the text grammar
 *   multisegment := term ("+" term)*   term := [INT "*"] "[" INT "," INT "]"
 * Whitespace is ignored; "0" denotes the empty multisegment.
 * Throws ErrorKind::Parse on malformed text or a segment with a > b.
 */
Multisegment parse_multisegment(std::string_view text);

} // namespace klrsk
