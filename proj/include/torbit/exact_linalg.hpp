#pragma once

#include "torbit/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torbit {

/**
 * Dense integer matrix with arbitrary-precision entries, row-major storage.
 *
 * All decompositions below are exact and deterministic: identical inputs
 * produce bit-identical outputs.
 */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(check_dims(rows, cols)) {}
    IntMatrix(int rows, int cols, std::vector<Int> entries);

    static IntMatrix identity(int n);
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
    static IntMatrix from_cols(const std::vector<std::vector<Int>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    std::vector<Int> row(int i) const;
    std::vector<Int> col(int j) const;

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    /// Exact determinant by fraction-free elimination; square matrices only.
    Int determinant() const;

    std::string to_string() const;

private:
    static std::size_t check_dims(int rows, int cols);

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> entries_;
};

/// Exact rational vector. cpp_rational keeps every entry normalized
/// (coprime numerator/denominator, positive denominator).
struct RatVector {
    std::vector<Rat> entries;

    RatVector() = default;
    explicit RatVector(std::vector<Rat> e) : entries(std::move(e)) {}

    int dim() const { return static_cast<int>(entries.size()); }
    bool operator==(const RatVector& other) const = default;
};

/**
 * Smith decomposition U * M * V = D with U, V unimodular and D diagonal,
 * d_1 | d_2 | ... | d_t, all d_i >= 0, zeros trailing.
 */
struct SnfResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    /// The diagonal of D, length min(rows, cols).
    std::vector<Int> diagonal() const;
};

/// Rank of M over the rationals (fraction-free Gaussian elimination).
int rational_rank(const IntMatrix& m);

/**
 * Basis of { x : M x = 0 } over Q. Each basis vector is cleared to coprime
 * integer entries with the first nonzero entry positive; vectors are ordered
 * by the free column they parameterize.
 */
std::vector<RatVector> kernel_basis(const IntMatrix& m);

/**
 * Smith normal form. Pivot choice: smallest absolute nonzero value in the
 * working submatrix, ties broken by (row, col) lexicographic order, so U and
 * V are deterministic even though they are not mathematically unique.
 */
SnfResult smith_normal_form(const IntMatrix& m);

/**
 * Some exact solution of A x = b with x_i = 0 for every i in fixed_zero
 * (0-based column indices), or nullopt if the constrained system is
 * inconsistent. No sign constraint is imposed on the remaining coordinates.
 */
std::optional<RatVector> solve_affine(const IntMatrix& a, const RatVector& b,
                                      const std::vector<int>& fixed_zero);

}  // namespace torbit
