#pragma once

/**
 * @file interval.hpp
 * @brief Interval extension of an idempotent semiring.
 *
 * ⊕, ⊙ and * are monotone in the canonical order of an idempotent semiring,
 * so applying them endpoint-wise maps enclosures to enclosures. The same
 * holds for the reversed order, which is why intervals are written with the
 * numerically smaller endpoint first even over min-plus.
 */

#include "semilin/semiring.hpp"

namespace semilin {

/// Validates and builds [lo, hi] over `base`.
inline Interval make_interval(const SemiringDescriptor& base, Scalar lo, Scalar hi) {
    Interval iv{std::move(lo), std::move(hi)};
    if (!SemiringDescriptor::interval_over(base).contains(iv)) {
        throw Error(errc::domain_mismatch, format_element(iv) + " is not an interval over " + base.token());
    }
    return iv;
}

inline Interval interval_add(const SemiringDescriptor& base, const Interval& x, const Interval& y) {
    return std::get<Interval>(SemiringDescriptor::interval_over(base).add(x, y));
}

inline Interval interval_mul(const SemiringDescriptor& base, const Interval& x, const Interval& y) {
    return std::get<Interval>(SemiringDescriptor::interval_over(base).mul(x, y));
}

inline Interval interval_closure(const SemiringDescriptor& base, const Interval& x) {
    return std::get<Interval>(SemiringDescriptor::interval_over(base).closure(x));
}

/// True when the scalar `x` lies inside `iv` (natural order).
inline bool interval_contains(const Interval& iv, const Scalar& x) {
    return natural_compare(iv.lo, x) != std::strong_ordering::greater &&
           natural_compare(x, iv.hi) != std::strong_ordering::greater;
}

}  // namespace semilin
