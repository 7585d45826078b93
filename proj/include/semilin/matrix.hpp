#pragma once

/**
 * @file matrix.hpp
 * @brief Dense row-major matrices over a semiring, and Mat_n(S) as a semiring.
 */

#include <cstddef>
#include <span>
#include <vector>

#include "semilin/semiring.hpp"

namespace semilin {

template <Semiring S>
class Matrix {
public:
    using value_type = value_t<S>;

    Matrix(S semiring, std::size_t rows, std::size_t cols)
        : semiring_(std::move(semiring)), rows_(rows), cols_(cols),
          data_(rows * cols, semiring_.zero()) {}

    Matrix(S semiring, std::size_t rows, std::size_t cols, std::vector<value_type> data)
        : semiring_(std::move(semiring)), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw Error(errc::dimension_mismatch, "data length differs from rows * cols");
        }
    }

    static Matrix identity(S semiring, std::size_t n) {
        Matrix m(std::move(semiring), n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = m.semiring_.one();
        return m;
    }

    static Matrix column(S semiring, std::vector<value_type> values) {
        const std::size_t n = values.size();
        return Matrix(std::move(semiring), n, 1, std::move(values));
    }

    const S& semiring() const { return semiring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const value_type> data() const { return data_; }

    std::vector<value_type> column_values(std::size_t j) const {
        std::vector<value_type> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    void set_column(std::size_t j, std::span<const value_type> values) {
        if (values.size() != rows_) throw Error(errc::dimension_mismatch, "column length");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
    }

    Matrix transposed() const {
        Matrix t(semiring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Same entries over another descriptor (e.g. with a precision policy).
    Matrix rebound(S semiring) const { return Matrix(std::move(semiring), rows_, cols_, data_); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    S semiring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> data_;
};

namespace detail {

template <Semiring S>
void require_same_semiring(const Matrix<S>& a, const Matrix<S>& b) {
    if constexpr (std::equality_comparable<S>) {
        if (!(a.semiring() == b.semiring())) {
            throw Error(errc::domain_mismatch, "matrices live over different semirings");
        }
    }
}

}  // namespace detail

template <Semiring S>
Matrix<S> mat_add(const Matrix<S>& a, const Matrix<S>& b) {
    detail::require_same_semiring(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(errc::dimension_mismatch, "mat_add needs equal shapes");
    }
    const auto& s = a.semiring();
    Matrix<S> c(s, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s.add(a(i, j), b(i, j));
    return c;
}

template <Semiring S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
    detail::require_same_semiring(a, b);
    if (a.cols() != b.rows()) throw Error(errc::dimension_mismatch, "mat_mul needs A.cols == B.rows");
    const auto& s = a.semiring();
    Matrix<S> c(s, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto acc = s.zero();
            for (std::size_t k = 0; k < a.cols(); ++k) acc = s.add(acc, s.mul(a(i, k), b(k, j)));
            c(i, j) = std::move(acc);
        }
    }
    return c;
}

/// y = A ⊙ x for a vector x.
template <Semiring S>
std::vector<value_t<S>> mat_vec(const Matrix<S>& a, std::span<const value_t<S>> x) {
    if (a.cols() != x.size()) throw Error(errc::dimension_mismatch, "mat_vec needs A.cols == |x|");
    const auto& s = a.semiring();
    std::vector<value_t<S>> y;
    y.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto acc = s.zero();
        for (std::size_t k = 0; k < a.cols(); ++k) acc = s.add(acc, s.mul(a(i, k), x[k]));
        y.push_back(std::move(acc));
    }
    return y;
}

/// Entrywise ⊕ of two vectors.
template <Semiring S>
std::vector<value_t<S>> vec_add(const S& s, std::span<const value_t<S>> x,
                                std::span<const value_t<S>> y) {
    if (x.size() != y.size()) throw Error(errc::dimension_mismatch, "vec_add needs equal lengths");
    std::vector<value_t<S>> z;
    z.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z.push_back(s.add(x[i], y[i]));
    return z;
}

/// 𝟏 at `index`, 𝟎 elsewhere.
template <Semiring S>
std::vector<value_t<S>> unit_vector(const S& s, std::size_t n, std::size_t index) {
    std::vector<value_t<S>> e(n, s.zero());
    e.at(index) = s.one();
    return e;
}

}  // namespace semilin
