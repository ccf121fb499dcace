#pragma once

#include <map>
#include <optional>
#include <vector>

#include "casilab/scalar.hpp"

namespace casilab {

/// Dense matrix of exact scalars. Small sizes only (algebra dimension).
class ScalarMat {
public:
    ScalarMat() : rows_(0), cols_(0) {}
    ScalarMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit ScalarMat(std::vector<std::vector<Scalar>> rows);

    static ScalarMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Scalar& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    ScalarMat operator*(const ScalarMat& o) const;
    friend bool operator==(const ScalarMat& a, const ScalarMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    size_t rank() const;
    Scalar det() const;                    // square only
    std::optional<ScalarMat> inverse() const;  // nullopt when singular

private:
    size_t rows_, cols_;
    std::vector<Scalar> data_;
};

/// Incremental reduced row echelon form over the scalar field with sparse
/// rows; used for exact nullspaces and linear membership tests.
class SparseRref {
public:
    using Row = std::map<uint32_t, Scalar>;

    explicit SparseRref(uint32_t cols) : cols_(cols) {}

    /// Reduces the row against the current pivots and absorbs it when a
    /// new pivot remains. Returns true if the row added rank.
    bool add_row(Row row);

    /// Reduces a row without absorbing it; the residual is empty iff the
    /// row lies in the span of what has been added.
    Row reduce(Row row) const;

    uint32_t rank() const { return static_cast<uint32_t>(pivots_.size()); }
    uint32_t cols() const { return cols_; }
    const std::map<uint32_t, Row>& pivot_rows() const { return pivots_; }

    /// Basis of the solution space of the homogeneous system, one vector
    /// per free column, each normalized with a 1 in its free column.
    std::vector<std::vector<Scalar>> nullspace() const;

private:
    uint32_t cols_;
    std::map<uint32_t, Row> pivots_;  // leading column -> normalized row
};

}  // namespace casilab
