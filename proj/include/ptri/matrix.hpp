#pragma once

#include <utility>
#include <vector>

#include "ptri/numeric.hpp"

namespace ptri {

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Int(0)) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Int& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw error("matrix product: shape mismatch");
        IntMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& aik = (*this)(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
            }
        return r;
    }

    void swap_rows(int i, int j) {
        for (int k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// Exact determinant by Bareiss fraction-free elimination.
Int det(const IntMatrix& m);

// Hermite normal form with a left unimodular factor: returns (H, U) with
// H = U*M, det(U) = +-1, H in row-style HNF (pivots positive, zeros below
// each pivot, entries above a pivot reduced into [0, pivot)).
std::pair<IntMatrix, IntMatrix> hnf(const IntMatrix& m);

// Basis of the rational kernel {x : M x = 0}, each basis vector scaled to a
// primitive integer vector with positive leading entry.
std::vector<std::vector<Int>> kernel(const IntMatrix& m);

}  // namespace ptri
