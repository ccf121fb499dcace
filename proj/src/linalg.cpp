#include "casilab/linalg.hpp"

#include <optional>

namespace casilab {

ScalarMat::ScalarMat(std::vector<std::vector<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows[0].size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto& r : rows) {
        if (r.size() != cols_) throw domain_error("ragged matrix rows");
        for (auto& v : r) data_.push_back(std::move(v));
    }
}

ScalarMat ScalarMat::identity(size_t n) {
    ScalarMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

ScalarMat ScalarMat::operator*(const ScalarMat& o) const {
    if (cols_ != o.rows_) throw domain_error("matrix product dimension mismatch");
    ScalarMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

namespace {

// In-place elimination; returns (rank, det_of_leading_minors_product).
// det is meaningful only when the matrix is square and rank == n.
std::pair<size_t, Scalar> eliminate(ScalarMat& m) {
    size_t rank = 0;
    Scalar det(1);
    size_t nr = m.rows(), nc = m.cols();
    for (size_t col = 0; col < nc && rank < nr; ++col) {
        size_t pivot = rank;
        while (pivot < nr && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == nr) continue;
        if (pivot != rank) {
            for (size_t j = col; j < nc; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            det = -det;
        }
        const Scalar p = m.at(rank, col);
        det *= p;
        for (size_t i = rank + 1; i < nr; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col) / p;
            for (size_t j = col; j < nc; ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return {rank, det};
}

}  // namespace

size_t ScalarMat::rank() const {
    ScalarMat tmp = *this;
    return eliminate(tmp).first;
}

Scalar ScalarMat::det() const {
    if (rows_ != cols_) throw domain_error("determinant of non-square matrix");
    ScalarMat tmp = *this;
    auto [rank, det] = eliminate(tmp);
    if (rank < rows_) return Scalar(0);
    return det;
}

std::optional<ScalarMat> ScalarMat::inverse() const {
    if (rows_ != cols_) throw domain_error("inverse of non-square matrix");
    size_t n = rows_;
    ScalarMat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    // Gauss-Jordan.
    size_t rank = 0;
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = rank;
        while (pivot < n && aug.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != rank)
            for (size_t j = 0; j < 2 * n; ++j) std::swap(aug.at(pivot, j), aug.at(rank, j));
        Scalar inv = Scalar(1) / aug.at(rank, col);
        for (size_t j = 0; j < 2 * n; ++j) aug.at(rank, j) *= inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || aug.at(i, col).is_zero()) continue;
            Scalar f = aug.at(i, col);
            for (size_t j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(rank, j);
        }
        ++rank;
    }
    ScalarMat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

bool SparseRref::add_row(Row row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    uint32_t lead = row.begin()->first;
    Scalar inv = Scalar(1) / row.begin()->second;
    for (auto& [c, v] : row) v *= inv;
    // Back-eliminate the new pivot column from the stored rows.
    for (auto& [pc, prow] : pivots_) {
        auto it = prow.find(lead);
        if (it == prow.end()) continue;
        Scalar f = it->second;
        prow.erase(it);
        for (const auto& [c, v] : row) {
            if (c == lead) continue;
            auto jt = prow.find(c);
            if (jt == prow.end()) {
                Scalar nv = -f * v;
                if (!nv.is_zero()) prow.emplace(c, nv);
            } else {
                jt->second -= f * v;
                if (jt->second.is_zero()) prow.erase(jt);
            }
        }
    }
    pivots_.emplace(lead, std::move(row));
    return true;
}

SparseRref::Row SparseRref::reduce(Row row) const {
    // Stored pivot rows contain no other pivot columns, so each pivot
    // entry of the incoming row is eliminated exactly once and the
    // subtractions introduce only non-pivot columns.
    std::vector<uint32_t> hits;
    for (const auto& [c, v] : row)
        if (pivots_.count(c)) hits.push_back(c);
    for (uint32_t c : hits) {
        auto rit = row.find(c);
        if (rit == row.end()) continue;
        Scalar f = rit->second;
        row.erase(rit);
        for (const auto& [cc, v] : pivots_.at(c)) {
            if (cc == c) continue;
            auto jt = row.find(cc);
            if (jt == row.end()) {
                Scalar nv = -f * v;
                if (!nv.is_zero()) row.emplace(cc, nv);
            } else {
                jt->second -= f * v;
                if (jt->second.is_zero()) row.erase(jt);
            }
        }
    }
    return row;
}

std::vector<std::vector<Scalar>> SparseRref::nullspace() const {
    std::vector<std::vector<Scalar>> basis;
    std::vector<bool> is_pivot(cols_, false);
    for (const auto& [c, row] : pivots_) is_pivot[c] = true;
    for (uint32_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols_, Scalar(0));
        v[f] = Scalar(1);
        for (const auto& [pc, row] : pivots_) {
            auto it = row.find(f);
            if (it != row.end()) v[pc] = -it->second;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace casilab
