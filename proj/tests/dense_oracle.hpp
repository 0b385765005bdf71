#pragma once
// Dense exact matrices over ℚ(i, √2) — TEST-ONLY oracle used to cross-check
// the signed-permutation fast path against straightforward O(4ⁿ) linear
// algebra and the paper's tensor-product displays.
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "atlas/clifford.hpp"
#include "atlas/scalar.hpp"

namespace atlas::testing {

class Dense {
public:
    Dense(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, ExtScalar::zero()) {}

    static Dense identity(std::size_t n) {
        Dense m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ExtScalar::one();
        return m;
    }

    static Dense from(const SignedPermMatrix& s) {
        Dense m(s.size(), s.size());
        for (std::size_t c = 0; c < s.size(); ++c)
            m.at(s.row_of(c), c) = times_i_pow(ExtScalar::one(), s.phase_of(c));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    ExtScalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const ExtScalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Dense operator*(const Dense& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("dense shape mismatch");
        Dense m(rows_, o.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                if (at(r, k).is_zero()) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += at(r, k) * o.at(k, c);
            }
        return m;
    }

    Dense operator+(const Dense& o) const {
        Dense m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k] + o.a_[k];
        return m;
    }

    Dense scale(const ExtScalar& s) const {
        Dense m(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = s * a_[k];
        return m;
    }

    /// Kronecker product, FIRST factor = most significant index block,
    /// matching the bit convention of the spinor basis.
    static Dense kron(const Dense& x, const Dense& y) {
        Dense m(x.rows_ * y.rows_, x.cols_ * y.cols_);
        for (std::size_t rx = 0; rx < x.rows_; ++rx)
            for (std::size_t cx = 0; cx < x.cols_; ++cx) {
                if (x.at(rx, cx).is_zero()) continue;
                for (std::size_t ry = 0; ry < y.rows_; ++ry)
                    for (std::size_t cy = 0; cy < y.cols_; ++cy)
                        m.at(rx * y.rows_ + ry, cx * y.cols_ + cy) = x.at(rx, cx) * y.at(ry, cy);
            }
        return m;
    }

    friend bool operator==(const Dense&, const Dense&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<ExtScalar> a_;
};

/// σ₀ = Id, σ₁, σ₂, σ₃ as dense 2×2 matrices.
inline Dense pauli(int which) {
    Dense m(2, 2);
    switch (which) {
        case 0:
            m.at(0, 0) = ExtScalar::one();
            m.at(1, 1) = ExtScalar::one();
            break;
        case 1:
            m.at(0, 1) = ExtScalar::one();
            m.at(1, 0) = ExtScalar::one();
            break;
        case 2:
            m.at(0, 1) = -ExtScalar::i();
            m.at(1, 0) = ExtScalar::i();
            break;
        case 3:
            m.at(0, 0) = ExtScalar::one();
            m.at(1, 1) = -ExtScalar::one();
            break;
        default: throw std::invalid_argument("pauli index");
    }
    return m;
}

/// kron over a list of Pauli labels, first label = first tensor factor.
inline Dense pauli_string(std::initializer_list<int> labels) {
    Dense m = Dense::identity(1);
    for (int l : labels) m = Dense::kron(m, pauli(l));
    return m;
}

}  // namespace atlas::testing
