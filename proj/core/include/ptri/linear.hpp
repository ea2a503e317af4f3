#pragma once

#include "ptri/scalar.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

namespace ptri {

/// Dense row-major matrix over a field.
class Matrix {
public:
    Matrix(RingSpec ring, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingSpec& ring() const { return ring_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Scalar> apply(const std::vector<Scalar>& x) const;

private:
    RingSpec ring_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct LinearSolution {
    /// One solution of A x = b, absent when the system is inconsistent.
    std::optional<std::vector<Scalar>> particular;
    /// Basis of the null space of A.
    std::vector<std::vector<Scalar>> kernel;
    std::size_t rank = 0;
};

/// Exact reduced row echelon solve of A x = b. Throws std::invalid_argument
/// on a dimension mismatch.
LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b);

std::vector<std::vector<Scalar>> null_space(const Matrix& a);
std::size_t rank_of(const Matrix& a);
Scalar determinant(Matrix a);

/// Integer determinant by fraction-free (Bareiss) elimination.
mpz_class integer_determinant(const std::vector<std::vector<long>>& m);

/// Incremental rank of a set of sparse vectors. Rows are reduced against the
/// pivots seen so far, so memory stays proportional to the rank.
class SparseRowReducer {
public:
    using Row = std::map<std::size_t, Scalar>;

    explicit SparseRowReducer(RingSpec ring) : ring_(ring) {}

    /// Returns true when the row was independent of the earlier ones.
    bool add(Row row) { return insert(std::move(row)).has_value(); }
    /// Leading column of the new pivot, or nothing when the row was dependent.
    std::optional<std::size_t> insert(Row row);
    std::size_t rank() const { return pivots_.size(); }
    /// Echelon rows keyed by their leading column.
    const std::map<std::size_t, Row>& pivot_rows() const { return pivots_; }

private:
    RingSpec ring_;
    // leading (largest) column -> row normalised to leading coefficient 1
    std::map<std::size_t, Row> pivots_;
};

/// Null space of the sparse system rows * x = 0 in `cols` unknowns.
std::vector<std::vector<Scalar>> sparse_null_space(RingSpec ring, const std::vector<SparseRowReducer::Row>& rows,
                                                   std::size_t cols);

}  // namespace ptri
