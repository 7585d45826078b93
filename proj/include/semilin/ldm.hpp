#pragma once

/**
 * @file ldm.hpp
 * @brief Semiring LDM-factorization and the triangular/diagonal solves built
 *        on it, for the Bellman equation X = A ⊙ X ⊕ B.
 *
 * A triple (L, D, M) with strictly lower L, diagonal D and strictly upper M is
 * an LDM-factorization of A when A* = M* D* L*. Solving X = AX ⊕ B then takes
 * three passes:
 *
 *     Z = L Z ⊕ B      forward substitution
 *     Y = D Y ⊕ Z      diagonal closure
 *     X = M X ⊕ Y      back substitution
 *
 * Every routine only uses ⊕, ⊙ and *, so it runs over any semiring where the
 * closures it meets are defined. Each run reports exact operation counts:
 *
 *   forward / back substitution   (n²-n)/2 ⊕, (n²-n)/2 ⊙
 *   diagonal solve                n ⊙, n *
 *   ldm_solve                     n²-n ⊕, n² ⊙, n *
 *   ldm_factorize                 (2n³-3n²+n)/6 ⊕, (2n³+3n²-5n)/6 ⊙, n(n+1)/2 *
 */

#include <cstddef>
#include <span>
#include <vector>

#include "semilin/matrix.hpp"
#include "semilin/op_count.hpp"

namespace semilin {

template <Semiring S>
struct LdmFactors {
    Matrix<S> lower;                 ///< strictly lower triangular
    std::vector<value_t<S>> diagonal;
    Matrix<S> upper;                 ///< strictly upper triangular

    std::size_t size() const { return diagonal.size(); }

    friend bool operator==(const LdmFactors&, const LdmFactors&) = default;
};

template <Semiring S>
struct VectorSolve {
    std::vector<value_t<S>> x;
    OpCountReport counts;
};

template <Semiring S>
struct PackedLdm {
    Matrix<S> packed;  ///< L below, D on, M above the diagonal
    OpCountReport counts;
};

template <Semiring S>
struct Factorization {
    LdmFactors<S> factors;
    OpCountReport counts;
};

namespace detail {

template <Semiring S>
void require_square(const Matrix<S>& a) {
    if (!a.square()) throw Error(errc::not_square, std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

template <Semiring S>
void require_length(const Matrix<S>& a, std::size_t n) {
    if (a.rows() != n) throw Error(errc::dimension_mismatch, "right-hand side length differs from matrix order");
}

template <Semiring S>
void require_strict_lower(const Matrix<S>& l) {
    const auto zero = l.semiring().zero();
    for (std::size_t i = 0; i < l.rows(); ++i)
        for (std::size_t j = i; j < l.cols(); ++j)
            if (!(l(i, j) == zero)) throw Error(errc::not_lower_triangular, "nonzero entry", Position{i, j});
}

template <Semiring S>
void require_strict_upper(const Matrix<S>& m) {
    const auto zero = m.semiring().zero();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j <= i && j < m.cols(); ++j)
            if (!(m(i, j) == zero)) throw Error(errc::not_upper_triangular, "nonzero entry", Position{i, j});
}

// x* with the failing position attached.
template <class Ops>
auto closure_at(const Ops& ops, const typename Ops::value_type& x, Position where) {
    try {
        return ops.closure(x);
    } catch (const Error& e) {
        if (e.code() != errc::closure_undefined) throw;
        throw Error(errc::closure_undefined, e.detail(), where);
    }
}

// The three stages of the general-case solve, operating on x in place.

template <class Ops, Semiring S>
void forward_stage(const Ops& ops, const Matrix<S>& l, std::vector<value_t<S>>& x) {
    const std::size_t n = x.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) x[i] = ops.add(x[i], ops.mul(l(i, j), x[j]));
}

template <class Ops, class T>
void diagonal_stage(const Ops& ops, std::span<const T> d, std::vector<T>& x) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = ops.mul(closure_at(ops, d[i], Position{i, i}), x[i]);
}

// Reads x^j for j > i. The standalone back-substitution listing in the
// literature multiplies by x^i here, which cannot satisfy X = MX ⊕ B.
template <class Ops, Semiring S>
void back_stage(const Ops& ops, const Matrix<S>& m, std::vector<value_t<S>>& x) {
    const std::size_t n = x.size();
    for (std::size_t i = n; i-- > 0;)
        for (std::size_t j = n; j-- > i + 1;) x[i] = ops.add(x[i], ops.mul(m(i, j), x[j]));
}

}  // namespace detail

/// Solves X = L X ⊕ B for strictly lower triangular L.
template <Semiring S>
VectorSolve<S> forward_substitution(const Matrix<S>& l, std::span<const value_t<S>> b) {
    detail::require_square(l);
    detail::require_length(l, b.size());
    detail::require_strict_lower(l);
    VectorSolve<S> out{std::vector<value_t<S>>(b.begin(), b.end()), {}};
    Counting<S> ops(l.semiring(), out.counts);
    detail::forward_stage(ops, l, out.x);
    return out;
}

/// Solves X = M X ⊕ B for strictly upper triangular M.
template <Semiring S>
VectorSolve<S> back_substitution(const Matrix<S>& m, std::span<const value_t<S>> b) {
    detail::require_square(m);
    detail::require_length(m, b.size());
    detail::require_strict_upper(m);
    VectorSolve<S> out{std::vector<value_t<S>>(b.begin(), b.end()), {}};
    Counting<S> ops(m.semiring(), out.counts);
    detail::back_stage(ops, m, out.x);
    return out;
}

/// Solves X = D X ⊕ B for D = diag(d): x_i = d_i* ⊙ b_i.
template <Semiring S>
VectorSolve<S> diagonal_solve(const S& s, std::span<const value_t<S>> d, std::span<const value_t<S>> b) {
    if (d.size() != b.size()) throw Error(errc::dimension_mismatch, "diagonal and right-hand side lengths differ");
    VectorSolve<S> out{std::vector<value_t<S>>(b.begin(), b.end()), {}};
    Counting<S> ops(s, out.counts);
    detail::diagonal_stage(ops, d, out.x);
    return out;
}

/// Solves X = A X ⊕ B given an LDM-factorization of A, i.e. X = M* D* L* B.
/// The back stage continues from the diagonal stage's values without
/// re-initializing x.
template <Semiring S>
VectorSolve<S> ldm_solve(const LdmFactors<S>& f, std::span<const value_t<S>> b) {
    const std::size_t n = f.size();
    if (f.lower.rows() != n || f.upper.rows() != n) throw Error(errc::dimension_mismatch, "factor sizes differ");
    detail::require_square(f.lower);
    detail::require_square(f.upper);
    detail::require_length(f.lower, b.size());
    detail::require_strict_lower(f.lower);
    detail::require_strict_upper(f.upper);

    VectorSolve<S> out{std::vector<value_t<S>>(b.begin(), b.end()), {}};
    Counting<S> ops(f.lower.semiring(), out.counts);
    detail::forward_stage(ops, f.lower, out.x);
    detail::diagonal_stage(ops, std::span<const value_t<S>>(f.diagonal), out.x);
    detail::back_stage(ops, f.upper, out.x);
    return out;
}

/// LDM-factorization in place on a working copy of A. Column j is finished
/// in iteration j; later columns read the transformed entries of earlier
/// ones. Aborts with closure_undefined if any closure on the way is
/// undefined.
template <Semiring S>
PackedLdm<S> ldm_factorize_packed(const Matrix<S>& a_in) {
    detail::require_square(a_in);
    PackedLdm<S> out{a_in, {}};
    auto& a = out.packed;
    Counting<S> ops(a_in.semiring(), out.counts);
    const std::size_t n = a.rows();
    std::vector<value_t<S>> v(n, a.semiring().zero());

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i <= j; ++i) v[i] = a(i, j);
        for (std::size_t k = 0; k < j; ++k)
            for (std::size_t i = k + 1; i <= j; ++i) v[i] = ops.add(v[i], ops.mul(a(i, k), v[k]));
        for (std::size_t i = 0; i < j; ++i) a(i, j) = ops.mul(detail::closure_at(ops, a(i, i), {i, i}), v[i]);
        a(j, j) = v[j];
        for (std::size_t k = 0; k < j; ++k)
            for (std::size_t i = j + 1; i < n; ++i) a(i, j) = ops.add(a(i, j), ops.mul(a(i, k), v[k]));
        const auto d = detail::closure_at(ops, v[j], {j, j});
        for (std::size_t i = j + 1; i < n; ++i) a(i, j) = ops.mul(a(i, j), d);
    }
    return out;
}

/// Splits a packed factor container into L, D and M with explicit 𝟎s.
template <Semiring S>
LdmFactors<S> unpack_ldm(const Matrix<S>& packed) {
    detail::require_square(packed);
    const std::size_t n = packed.rows();
    const auto& s = packed.semiring();
    LdmFactors<S> f{Matrix<S>(s, n, n), std::vector<value_t<S>>(n, s.zero()), Matrix<S>(s, n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j) f.lower(i, j) = packed(i, j);
            else if (i < j) f.upper(i, j) = packed(i, j);
            else f.diagonal[i] = packed(i, i);
        }
    }
    return f;
}

template <Semiring S>
Matrix<S> pack_ldm(const LdmFactors<S>& f) {
    const std::size_t n = f.size();
    Matrix<S> packed = mat_add(f.lower, f.upper);
    for (std::size_t i = 0; i < n; ++i) packed(i, i) = f.diagonal[i];
    return packed;
}

template <Semiring S>
Factorization<S> ldm_factorize(const Matrix<S>& a) {
    auto packed = ldm_factorize_packed(a);
    return {unpack_ldm(packed.packed), packed.counts};
}

/// Symmetric variant for a commutative semiring: M = Lᵀ, so row j of L is
/// copied from column j of M instead of being computed, and each diagonal
/// closure is evaluated once. Produces the same factors as ldm_factorize.
template <Semiring S>
PackedLdm<S> ldm_factorize_symmetric_packed(const Matrix<S>& a_in) {
    detail::require_square(a_in);
    if (!is_commutative(a_in.semiring())) throw Error(errc::not_commutative, "symmetric factorization");
    const std::size_t n = a_in.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!(a_in(i, j) == a_in(j, i))) throw Error(errc::not_symmetric, "entry differs from its transpose", Position{i, j});

    PackedLdm<S> out{a_in, {}};
    auto& a = out.packed;
    Counting<S> ops(a_in.semiring(), out.counts);
    std::vector<value_t<S>> v(n, a.semiring().zero());
    std::vector<value_t<S>> d_star;
    d_star.reserve(n);

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i <= j; ++i) v[i] = a(i, j);
        for (std::size_t k = 0; k < j; ++k)
            for (std::size_t i = k + 1; i < j; ++i) v[i] = ops.add(v[i], ops.mul(a(i, k), v[k]));
        for (std::size_t i = 0; i < j; ++i) {
            a(i, j) = ops.mul(d_star[i], v[i]);
            a(j, i) = a(i, j);
        }
        for (std::size_t k = 0; k < j; ++k) v[j] = ops.add(v[j], ops.mul(a(j, k), v[k]));
        a(j, j) = v[j];
        d_star.push_back(detail::closure_at(ops, v[j], {j, j}));
    }
    return out;
}

template <Semiring S>
Factorization<S> ldm_factorize_symmetric(const Matrix<S>& a) {
    auto packed = ldm_factorize_symmetric_packed(a);
    return {unpack_ldm(packed.packed), packed.counts};
}

/// A* assembled column by column from ldm_solve on the unit vectors.
template <Semiring S>
Matrix<S> closure_ldm(const Matrix<S>& a, OpCountReport* counts = nullptr) {
    auto fact = ldm_factorize(a);
    OpCountReport total = fact.counts;
    const std::size_t n = a.rows();
    Matrix<S> star(a.semiring(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto e = unit_vector(a.semiring(), n, j);
        auto col = ldm_solve(fact.factors, std::span<const value_t<S>>(e));
        total += col.counts;
        star.set_column(j, col.x);
    }
    if (counts != nullptr) *counts += total;
    return star;
}

/// Mat_n(S) as a semiring in its own right; closure goes through LDM.
template <Semiring S>
class MatrixSemiring {
public:
    using value_type = Matrix<S>;

    MatrixSemiring(S base, std::size_t n) : base_(std::move(base)), n_(n) {}

    value_type zero() const { return Matrix<S>(base_, n_, n_); }
    value_type one() const { return Matrix<S>::identity(base_, n_); }
    value_type add(const value_type& x, const value_type& y) const { return mat_add(x, y); }
    value_type mul(const value_type& x, const value_type& y) const { return mat_mul(x, y); }
    value_type closure(const value_type& x) const { return closure_ldm(x); }

    bool idempotent() const { return is_idempotent(base_); }
    bool commutative() const { return n_ <= 1 && is_commutative(base_); }

    const S& base() const { return base_; }
    std::size_t order() const { return n_; }

private:
    S base_;
    std::size_t n_;
};

}  // namespace semilin
