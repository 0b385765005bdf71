#pragma once
/// @file linalg.hpp
/// Small dense exact linear algebra over ℚ(i, √2): row reduction, rank,
/// kernels and linear solves.  Used for Fierz row derivation, centralizer
/// computations and stabilizer kernels — all places where the answer must be
/// exact, not numerically approximate.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "atlas/scalar.hpp"

namespace atlas {

class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, ExtScalar::zero()) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ExtScalar::one();
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    ExtScalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const ExtScalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// In-place Gauss–Jordan reduction to reduced row echelon form.
    /// Returns the pivot column of each pivot row, in order.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && at(p, col).is_zero()) ++p;
            if (p == rows_) continue;
            swap_rows(p, row);
            ExtScalar inv = at(row, col).inverse();
            for (std::size_t c = col; c < cols_; ++c) at(row, c) = inv * at(row, c);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || at(r, col).is_zero()) continue;
                ExtScalar f = at(r, col);
                for (std::size_t c = col; c < cols_; ++c) at(r, c) -= f * at(row, c);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

    std::size_t rank() const {
        ExactMatrix copy = *this;
        return copy.rref().size();
    }

    /// Basis of the right null space {x : A x = 0}.
    std::vector<std::vector<ExtScalar>> kernel() const {
        ExactMatrix r = *this;
        std::vector<std::size_t> pivots = r.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<ExtScalar>> basis;
        for (std::size_t free = 0; free < cols_; ++free) {
            if (is_pivot[free]) continue;
            std::vector<ExtScalar> v(cols_, ExtScalar::zero());
            v[free] = ExtScalar::one();
            for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -r.at(pr, free);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// Standard matrix product (throws on inner-dimension mismatch).
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product size mismatch");
        ExactMatrix c(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const ExtScalar& f = a.at(r, k);
                if (f.is_zero()) continue;
                for (std::size_t col = 0; col < b.cols_; ++col) {
                    const ExtScalar& g = b.at(k, col);
                    if (!g.is_zero()) c.at(r, col) += f * g;
                }
            }
        return c;
    }

    /// Matrix–vector product.
    std::vector<ExtScalar> mul_vec(const std::vector<ExtScalar>& x) const {
        if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
        std::vector<ExtScalar> y(rows_, ExtScalar::zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (!at(r, c).is_zero()) y[r] += at(r, c) * x[c];
        return y;
    }

    bool is_zero() const {
        for (const ExtScalar& c : a_)
            if (!c.is_zero()) return false;
        return true;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Solve A x = b exactly; std::nullopt when inconsistent.  With several
    /// solutions, free variables are set to zero.
    std::optional<std::vector<ExtScalar>> solve(const std::vector<ExtScalar>& b) const {
        if (b.size() != rows_) throw std::invalid_argument("rhs length mismatch");
        ExactMatrix aug(rows_, cols_ + 1);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
            aug.at(r, cols_) = b[r];
        }
        std::vector<std::size_t> pivots = aug.rref();
        if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // 0 = 1 row
        std::vector<ExtScalar> x(cols_, ExtScalar::zero());
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(pr, cols_);
        return x;
    }

private:
    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(r1, c), at(r2, c));
    }

    std::size_t rows_, cols_;
    std::vector<ExtScalar> a_;
};

}  // namespace atlas
