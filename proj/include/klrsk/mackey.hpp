/**
 * @file mackey.hpp
 * @brief Matrices of root vectors with prescribed row and column sums, and
 *        their degree, as used in the Mackey filtration of a restricted
 *        induction product.
 */
#pragma once

#include "klrsk/root_lattice.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace klrsk {

class MackeyMatrix {
public:
    MackeyMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(size_t(rows) * cols) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const RootVector& at(int i, int j) const { return entries_[size_t(i) * cols_ + j]; }
    RootVector& at(int i, int j) { return entries_[size_t(i) * cols_ + j]; }

    std::vector<RootVector> row(int i) const;
    std::vector<RootVector> col(int j) const;
    RootVector row_sum(int i) const;
    RootVector col_sum(int j) const;

    bool operator==(const MackeyMatrix&) const = default;
    std::string to_string() const;

private:
    int rows_;
    int cols_;
    std::vector<RootVector> entries_;
};

/// -sum over i < i', j' < j of (delta_{i,j}, delta_{i',j'}).
int64_t degree(const MackeyMatrix& delta);

/**
 * Visit every matrix with row sums `beta` and column sums `gamma` exactly once.
 * Throws WeightMismatch if the totals differ and CapExceeded if the total
 * height is above `cap`.
 */
void for_each_mackey(const std::vector<RootVector>& beta, const std::vector<RootVector>& gamma,
                     const std::function<void(const MackeyMatrix&)>& visit, int cap = kDefaultWordCap);

std::vector<MackeyMatrix> enumerate_mackey(const std::vector<RootVector>& beta, const std::vector<RootVector>& gamma,
                                           int cap = kDefaultWordCap);

} // namespace klrsk
