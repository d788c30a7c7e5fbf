/**
 * @file root_lattice.hpp
 * @brief Cartan datum of type A_infinity: simple roots indexed by the integers,
 *        the positive cone of the root lattice, and words over the index set.
 */
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace klrsk {

/// A word over the root indices, e.g. (2,1) for alpha_2 followed by alpha_1.
using Word = std::vector<int>;

/// Symmetric form on simple roots: 2 on the diagonal, -1 for neighbours, 0 otherwise.
constexpr int bilinear_form(int i, int j) noexcept
{
    if (i == j)
        return 2;
    if (i - j == 1 || j - i == 1)
        return -1;
    return 0;
}

/**
 * @brief Element of the positive cone Q+: a finitely supported map from root
 *        index to a positive multiplicity.
 *
 * Zero multiplicities are never stored, so structural equality is equality
 * in the lattice.
 */
class RootVector {
public:
    RootVector() = default;

    static RootVector simple(int index, int mult = 1);
    /// Sum of simple roots alpha_b + ... + alpha_e.
    static RootVector interval(int b, int e);
    static RootVector of_word(const Word& w);

    int operator[](int index) const;
    int height() const noexcept { return height_; }
    bool empty() const noexcept { return mult_.empty(); }

    const std::map<int, int>& entries() const noexcept { return mult_; }

    void add(int index, int mult = 1);
    RootVector& operator+=(const RootVector& other);
    RootVector operator+(const RootVector& other) const;
    /// Throws WeightMismatch unless `other <= *this`.
    RootVector operator-(const RootVector& other) const;

    bool operator==(const RootVector&) const = default;
    auto operator<=>(const RootVector& o) const { return mult_ <=> o.mult_; }

    std::string to_string() const;

private:
    std::map<int, int> mult_;
    int height_ = 0;
};

/// Bilinear extension of `bilinear_form`.
int64_t form(const RootVector& a, const RootVector& b);

/// Partial order of Q+: every multiplicity of `a` is at most that of `b`.
bool leq(const RootVector& a, const RootVector& b);

inline constexpr int kDefaultWordCap = 12;

/**
 * @brief Visit every distinct word of weight `beta` exactly once, in
 *        lexicographic order.
 *
 * Throws CapExceeded when `beta.height() > cap`.
 */
void for_each_word(const RootVector& beta, const std::function<void(const Word&)>& visit,
                   int cap = kDefaultWordCap);

std::vector<Word> enumerate_words(const RootVector& beta, int cap = kDefaultWordCap);

/// |beta|! / prod(c_i!) as an exact integer.
uint64_t multinomial_count(const RootVector& beta);

std::string word_to_string(const Word& w);

} // namespace klrsk
