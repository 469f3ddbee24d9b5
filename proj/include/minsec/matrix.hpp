#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "minsec/rational.hpp"

namespace minsec {

// Dense matrix over the rationals, just large enough for exact kernel and
// rank computations on evaluation matrices.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// Incremental row reduction: rows are fed one at a time and kept in reduced
// echelon form, so the rank can be watched while samples accumulate.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return rows_.size(); }

    // Reduces the row against the current basis; keeps it if independent.
    bool add_row(std::vector<Rational> row) {
        if (row.size() != cols_) throw std::invalid_argument("row size mismatch");
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = row[pivots_[r]];  // copy: the entry changes below
            if (c != 0) {
                for (std::size_t j = 0; j < cols_; ++j) row[j] -= c * rows_[r][j];
            }
        }
        std::size_t p = cols_;
        for (std::size_t j = 0; j < cols_; ++j)
            if (row[j] != 0) {
                p = j;
                break;
            }
        if (p == cols_) return false;
        Rational inv = Rational(1) / row[p];
        for (std::size_t j = p; j < cols_; ++j) row[j] *= inv;
        // Back-eliminate so stored rows stay fully reduced.
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational c = rows_[r][p];
            if (c != 0) {
                for (std::size_t j = 0; j < cols_; ++j) rows_[r][j] -= c * row[j];
            }
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    // Basis of the right kernel of the accumulated row space, echelon
    // normalized: one vector per free column, unit entry there.
    std::vector<std::vector<Rational>> kernel_basis() const {
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t p : pivots_) is_pivot[p] = true;
        std::vector<std::vector<Rational>> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot[f]) continue;
            std::vector<Rational> v(cols_, Rational(0));
            v[f] = 1;
            for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
            basis.push_back(std::move(v));
        }
        return basis;
    }

    const std::vector<std::vector<Rational>>& reduced_rows() const { return rows_; }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

private:
    std::size_t cols_;
    std::vector<std::vector<Rational>> rows_;   // reduced, sorted by pivot
    std::vector<std::size_t> pivots_;
};

inline std::size_t matrix_rank(const RationalMatrix& m) {
    RowReducer red(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        red.add_row(std::move(row));
    }
    return red.rank();
}

// Echelon-normalized basis of the right kernel; empty iff full column rank.
inline std::vector<std::vector<Rational>> matrix_kernel(const RationalMatrix& m) {
    RowReducer red(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m.at(i, j);
        red.add_row(std::move(row));
    }
    return red.kernel_basis();
}

}  // namespace minsec
