#pragma once

/**
 * @file iterative.hpp
 * @brief Successive-approximation solvers for X = A ⊙ X ⊕ B and closures by
 *        series or exact field inversion.
 *
 * Jacobi is the Bellman iteration, Gauss–Seidel the Ford iteration. Both
 * start from X₀ = B and stop at the first exact fixed point; there is no
 * tolerance anywhere because every value is exact.
 */

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "semilin/matrix.hpp"
#include "semilin/op_count.hpp"

namespace semilin {

template <Semiring S>
struct IterationOutcome {
    std::vector<value_t<S>> solution;
    std::size_t sweeps = 0;
    bool stabilized = false;
    OpCountReport counts;
};

namespace detail {

inline std::size_t effective_limit(std::size_t limit, std::size_t n) {
    return limit != 0 ? limit : std::max<std::size_t>(n, 1);
}

[[noreturn]] inline void throw_non_stabilized(std::size_t limit, const char* what) {
    throw Error(errc::non_stabilized,
                std::string(what) + " has no fixed point within " + std::to_string(limit) + " steps");
}

template <Semiring S>
void require_system(const Matrix<S>& a, std::size_t b_len) {
    if (!a.square()) throw Error(errc::not_square, "coefficient matrix");
    if (a.rows() != b_len) throw Error(errc::dimension_mismatch, "right-hand side length differs from matrix order");
}

// One Jacobi step: (A ⊙ x) ⊕ b, accumulated from b_i.
template <class Ops, Semiring S>
std::vector<value_t<S>> jacobi_step(const Ops& ops, const Matrix<S>& a, std::span<const value_t<S>> x,
                                    std::span<const value_t<S>> b) {
    std::vector<value_t<S>> y;
    y.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        auto acc = b[i];
        for (std::size_t j = 0; j < x.size(); ++j) acc = ops.add(acc, ops.mul(a(i, j), x[j]));
        y.push_back(std::move(acc));
    }
    return y;
}

}  // namespace detail

/// X₀ = B, X_{k+1} = (A ⊙ X_k) ⊕ B until X_{k+1} = X_k. `limit` bounds the
/// number of sweeps (0 selects the matrix order). Throws non_stabilized.
template <Semiring S>
IterationOutcome<S> jacobi_solve(const Matrix<S>& a, std::span<const value_t<S>> b, std::size_t limit = 0) {
    detail::require_system(a, b.size());
    const std::size_t max_sweeps = detail::effective_limit(limit, a.rows());
    IterationOutcome<S> out;
    Counting<S> ops(a.semiring(), out.counts);
    std::vector<value_t<S>> x(b.begin(), b.end());
    for (std::size_t sweep = 1; sweep <= max_sweeps; ++sweep) {
        auto next = detail::jacobi_step(ops, a, std::span<const value_t<S>>(x), b);
        if (next == x) {
            out.solution = std::move(x);
            out.sweeps = sweep;
            out.stabilized = true;
            return out;
        }
        x = std::move(next);
    }
    detail::throw_non_stabilized(max_sweeps, "Jacobi iteration");
}

/// The k-th Jacobi iterate, (I ⊕ A ⊕ … ⊕ A^k) ⊙ B, without a stopping test.
template <Semiring S>
std::vector<value_t<S>> jacobi_sweeps(const Matrix<S>& a, std::span<const value_t<S>> b, std::size_t k) {
    detail::require_system(a, b.size());
    const auto& ops = a.semiring();
    std::vector<value_t<S>> x(b.begin(), b.end());
    for (std::size_t sweep = 0; sweep < k; ++sweep) x = detail::jacobi_step(ops, a, std::span<const value_t<S>>(x), b);
    return x;
}

/// In-place ascending sweeps x_i := (⊕_j a_ij ⊙ x_j) ⊕ b_i, reading values
/// already updated in the current sweep. Stops after a sweep that changes
/// nothing; that confirming sweep is included in `sweeps`.
template <Semiring S>
IterationOutcome<S> gauss_seidel_solve(const Matrix<S>& a, std::span<const value_t<S>> b, std::size_t limit = 0) {
    detail::require_system(a, b.size());
    const std::size_t max_sweeps = detail::effective_limit(limit, a.rows());
    const std::size_t n = b.size();
    IterationOutcome<S> out;
    Counting<S> ops(a.semiring(), out.counts);
    std::vector<value_t<S>> x(b.begin(), b.end());
    for (std::size_t sweep = 1; sweep <= max_sweeps; ++sweep) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i) {
            auto acc = b[i];
            for (std::size_t j = 0; j < n; ++j) acc = ops.add(acc, ops.mul(a(i, j), x[j]));
            if (!(acc == x[i])) {
                changed = true;
                x[i] = std::move(acc);
            }
        }
        if (!changed) {
            out.solution = std::move(x);
            out.sweeps = sweep;
            out.stabilized = true;
            return out;
        }
    }
    detail::throw_non_stabilized(max_sweeps, "Gauss-Seidel iteration");
}

/// A* as the first stable partial sum S_k = I ⊕ A ⊕ … ⊕ A^k, computed as
/// S_{k+1} = I ⊕ A ⊙ S_k. `limit` bounds k (0 selects the matrix order).
template <Semiring S>
Matrix<S> closure_series(const Matrix<S>& a, std::size_t limit = 0, OpCountReport* counts = nullptr) {
    if (!a.square()) throw Error(errc::not_square, "closure needs a square matrix");
    const std::size_t n = a.rows();
    const std::size_t max_power = detail::effective_limit(limit, n);
    OpCountReport local;
    Counting<S> ops(a.semiring(), local);
    const auto identity = Matrix<S>::identity(a.semiring(), n);
    Matrix<S> partial = identity;
    for (std::size_t k = 1; k <= max_power; ++k) {
        Matrix<S> next = identity;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t m = 0; m < n; ++m) next(i, j) = ops.add(next(i, j), ops.mul(a(i, m), partial(m, j)));
        if (next == partial) {
            if (counts != nullptr) *counts += local;
            return partial;
        }
        partial = std::move(next);
    }
    detail::throw_non_stabilized(max_power, "star series");
}

/// Exact (I - A)^{-1} over the rational field by Gauss–Jordan elimination.
inline Matrix<SemiringDescriptor> field_matrix_star(const Matrix<SemiringDescriptor>& a) {
    if (a.semiring().kind() != SemiringDescriptor::Kind::rational_field || a.semiring().is_interval()) {
        throw Error(errc::domain_mismatch, "field closure needs the rational field");
    }
    if (!a.square()) throw Error(errc::not_square, "field closure needs a square matrix");
    const std::size_t n = a.rows();
    std::vector<std::vector<Rational>> lhs(n, std::vector<Rational>(n));
    std::vector<std::vector<Rational>> rhs(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            lhs[i][j] = (i == j ? Rational{1} : Rational{0}) - std::get<Rational>(a(i, j));
            rhs[i][j] = i == j ? Rational{1} : Rational{0};
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && lhs[pivot][col] == 0) ++pivot;
        if (pivot == n) throw Error(errc::singular_matrix, "I - A is not invertible");
        std::swap(lhs[pivot], lhs[col]);
        std::swap(rhs[pivot], rhs[col]);
        const Rational inv = 1 / lhs[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            lhs[col][j] *= inv;
            rhs[col][j] *= inv;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || lhs[r][col] == 0) continue;
            const Rational factor = lhs[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                lhs[r][j] -= factor * lhs[col][j];
                rhs[r][j] -= factor * rhs[col][j];
            }
        }
    }
    Matrix<SemiringDescriptor> star(a.semiring(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) star(i, j) = rhs[i][j];
    return star;
}

}  // namespace semilin
