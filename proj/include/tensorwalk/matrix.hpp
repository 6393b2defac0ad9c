#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tensorwalk/errors.hpp"
#include "tensorwalk/exact.hpp"

namespace tensorwalk {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    ExactScalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const ExactScalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const ExactScalar> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }

    std::span<const ExactScalar> flat() const { return data_; }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw invalid_input_error("matrix product: shape mismatch");
        ExactMatrix out(a.rows_, b.cols_);
        ExactScalar term;
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const ExactScalar& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j) == 0) continue;
                    term = aik * b(k, j);
                    out(i, j) += term;
                }
            }
        }
        return out;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw invalid_input_error("matrix sum: shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend ExactMatrix operator*(const ExactScalar& s, ExactMatrix m) {
        for (auto& x : m.data_) x *= s;
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<ExactScalar> data_;
};

/// Row vector times matrix.
inline std::vector<ExactScalar> row_times(std::span<const ExactScalar> v, const ExactMatrix& m) {
    if (v.size() != m.rows()) throw invalid_input_error("row_times: shape mismatch");
    std::vector<ExactScalar> out(m.cols());
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(k, j) != 0) out[j] += v[k] * m(k, j);
        }
    }
    return out;
}

/// m^e by repeated squaring; m^0 = I.
inline ExactMatrix matrix_power(const ExactMatrix& m, unsigned e) {
    if (m.rows() != m.cols()) throw invalid_input_error("matrix_power: matrix must be square");
    ExactMatrix result = ExactMatrix::identity(m.rows());
    ExactMatrix base = m;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

/// Determinant by Bareiss elimination with row pivoting. Every intermediate
/// quotient is exact.
inline ExactScalar determinant(ExactMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw invalid_input_error("determinant: matrix must be square");
    if (n == 0) return ExactScalar(1);
    ExactScalar prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return ExactScalar(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// Rank of the row space of `rows` (each entry one row vector), by exact
/// Gaussian elimination.
inline std::size_t rank_of_rows(std::vector<std::vector<ExactScalar>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            const ExactScalar factor = rows[i][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline bool is_singular(const ExactMatrix& m) {
    std::vector<std::vector<ExactScalar>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.emplace_back(m.row(i).begin(), m.row(i).end());
    return rank_of_rows(std::move(rows)) < m.rows();
}

}  // namespace tensorwalk
