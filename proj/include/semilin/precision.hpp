#pragma once

/**
 * @file precision.hpp
 * @brief User-controlled rounding of exact rationals.
 *
 * Rounding picks the simplest rational (smallest denominator, then smallest
 * absolute numerator) within a closed ball of radius epsilon around the
 * input. The search walks the continued-fraction expansion of the ball's
 * endpoints, so the cost is logarithmic in the denominators involved.
 */

#include "semilin/element.hpp"

namespace semilin {

struct PrecisionPolicy {
    enum class Mode { exact, round_each_op };

    Rational epsilon{0};
    Mode mode = Mode::exact;

    static PrecisionPolicy exact() { return {}; }

    /// A zero epsilon collapses to exact mode.
    static PrecisionPolicy round_each_op(const Rational& eps) {
        if (eps < 0) throw Error(errc::domain_mismatch, "epsilon must be nonnegative");
        if (eps == 0) return exact();
        return {eps, Mode::round_each_op};
    }

    bool rounds() const { return mode == Mode::round_each_op; }

    friend bool operator==(const PrecisionPolicy&, const PrecisionPolicy&) = default;
};

namespace detail {

inline Integer floor_positive(const Rational& q) {
    return boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q);
}

// Simplest rational in [lo, hi] for 0 < lo <= hi.
inline Rational simplest_in_positive(const Rational& lo, const Rational& hi) {
    const Integer whole = floor_positive(lo);
    const Rational base{whole};
    if (base == lo) return lo;
    if (base + 1 <= hi) return base + 1;
    // lo and hi share the integer part; recurse on the reciprocal tails.
    const Rational tail = simplest_in_positive(1 / (hi - base), 1 / (lo - base));
    return base + 1 / tail;
}

}  // namespace detail

/// Simplest rational in the closed interval [lo, hi].
inline Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (hi < lo) throw Error(errc::domain_mismatch, "empty interval");
    if (lo <= 0 && 0 <= hi) return Rational{0};
    if (lo > 0) return detail::simplest_in_positive(lo, hi);
    return -detail::simplest_in_positive(-hi, -lo);
}

inline Rational round_rational(const Rational& q, const PrecisionPolicy& policy) {
    if (policy.epsilon == 0) return q;
    return simplest_rational_between(q - policy.epsilon, q + policy.epsilon);
}

}  // namespace semilin
