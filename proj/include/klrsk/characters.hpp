/**
 * @file characters.hpp
 * @brief Graded characters as finite sums of words with Laurent polynomial
 *        coefficients, the quantum shuffle product, restriction to block
 *        weights, and the characters of segment, ladder, nabla, KR, Sigma and
 *        RSK-standard modules.
 *
 * Conventions: a shift M<k> multiplies every coefficient by q^k. In a shuffle
 * u o v, each pair where a letter b of v lands before a letter a of u
 * contributes q^{-(alpha_a, alpha_b)}.
 */
#pragma once

#include "klrsk/laurent.hpp"
#include "klrsk/multisegment.hpp"

#include <map>
#include <vector>

namespace klrsk {

class GradedCharacter {
public:
    GradedCharacter() = default;
    explicit GradedCharacter(RootVector weight) : weight_(std::move(weight)) {}
    /// The single word w with coefficient 1.
    static GradedCharacter of_word(const Word& w);

    const RootVector& weight() const noexcept { return weight_; }
    const std::map<Word, LaurentPoly>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    /// Throws WeightMismatch if `w` has the wrong weight.
    void add(const Word& w, const LaurentPoly& coef);
    LaurentPoly coefficient(const Word& w) const;

    GradedCharacter& operator+=(const GradedCharacter& o);
    GradedCharacter operator-(const GradedCharacter& o) const;

    GradedCharacter shifted(int k) const;
    /// Character of the dual module: every coefficient bar-involuted.
    GradedCharacter dual() const;
    bool is_self_dual() const { return dual() == *this; }
    /// Every coefficient has only nonnegative integer entries.
    bool nonnegative() const;
    /// Every coefficient is exactly 1.
    bool homogeneous_unit() const;
    /// Sum of all coefficients at q = 1.
    int64_t dimension() const;

    bool operator==(const GradedCharacter&) const = default;

    /// One `coefficient . (word)` per line, in word order.
    std::string to_string() const;

private:
    RootVector weight_;
    std::map<Word, LaurentPoly> terms_;
};

/// Serial reference shuffle.
GradedCharacter shuffle(const GradedCharacter& a, const GradedCharacter& b);
/// Same result as `shuffle`, splitting the term pairs over OpenMP threads.
GradedCharacter shuffle_parallel(const GradedCharacter& a, const GradedCharacter& b);
/// Left-to-right product; the empty list gives the unit character.
GradedCharacter shuffle(const std::vector<GradedCharacter>& factors);

/// Keys are the block words, one per entry of `blocks`; zero blocks give empty words.
using Restriction = std::map<std::vector<Word>, LaurentPoly>;
Restriction restrict_char(const GradedCharacter& ch, const std::vector<RootVector>& blocks);

/// The word (e, e-1, ..., b).
GradedCharacter segment_char(const Segment& s);
/// Homogeneous character from the one-letter restriction recursion;
/// throws MalformedLadder unless lambda, mu strictly decrease with lambda_i <= mu_i.
GradedCharacter ladder_char(const std::vector<int>& lambda, const std::vector<int>& mu);
GradedCharacter ladder_char(const LadderMultisegment& l);
/// L_{[a,b_1]} o ... o L_{[a,b_k]} <k choose 2>; ends must be weakly decreasing and >= a.
GradedCharacter nabla_char(int a, const std::vector<int>& ends);
GradedCharacter nabla_char(const LeftAlignedBlock& block);
/// Proper standard module: right-lexicographically sorted product, shifted by sum of (p choose 2).
GradedCharacter kr_char(const Multisegment& m);
/// Per-block nabla characters of the left-aligned decomposition.
std::vector<GradedCharacter> indicator_char(const Multisegment& m);
/// Induction of the indicator module.
GradedCharacter sigma_char(const Multisegment& m);
/// Product of the RSK ladder characters times q^{-d(m)}.
GradedCharacter gamma_char(const Multisegment& m);

LaurentPoly coefficient_of_word(const GradedCharacter& ch, const Word& w);

/// Coefficient of w in the shuffle of `factors`, without expanding the product.
LaurentPoly coefficient_in_product(const Word& w, const std::vector<GradedCharacter>& factors);
/// Same for products of single words with coefficient 1.
LaurentPoly coefficient_in_word_product(const Word& w, const std::vector<Word>& factors);

/// Numerically smallest word in the support of kr_char(m).
Word dominant_word(const Multisegment& m);
/// The weight's letters sorted in descending order.
Word spherical_word(const RootVector& beta);

/// Shift of nabla_2 inside L_seg o nabla(a; ends): -#{i : b(seg) <= ends_i <= e(seg)}.
int degseg_shift(const Segment& seg, int a, const std::vector<int>& ends);
/// Ends of the nabla_2 forced by weight bookkeeping; throws NoSuchSubquotient.
std::vector<int> degseg_target(const Segment& seg, int a, const std::vector<int>& ends);
/// True iff L_seg o nabla(a; ends) - q^m nabla_2 has nonnegative coefficients.
bool check_degseg(const Segment& seg, int a, const std::vector<int>& ends, int m);

} // namespace klrsk
