#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lieball {

/// One row of a sparse matrix: (column, value) pairs, columns strictly
/// increasing, values nonzero.
using SparseRow = std::vector<std::pair<std::size_t, mpq_class>>;

/// Row-sparse matrix over Q.
class SparseRationalMatrix {
public:
    SparseRationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Adds v to entry (r, c).
    void add(std::size_t r, std::size_t c, const mpq_class& v);
    mpq_class at(std::size_t r, std::size_t c) const;
    const SparseRow& row(std::size_t r) const { return data_[r]; }

    /// Exact rank by sparse Gaussian elimination over Q.
    std::size_t rank() const;

    /// Basis of {x : A x = 0}, one vector per non-pivot column (that entry is 1),
    /// obtained from the reduced row echelon form.
    std::vector<std::vector<mpq_class>> kernel_basis() const;

    /// Dense copy with every row scaled by the lcm of its denominators.
    std::vector<std::vector<mpz_class>> to_integer_rows() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<SparseRow> data_;
};

/// Rank of a dense integer matrix by fraction-free (Bareiss) elimination.
/// Every intermediate division is exact.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a);

}  // namespace lieball
