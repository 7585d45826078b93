#pragma once

/**
 * @file semiring.hpp
 * @brief The semiring contract and the runtime-selected semiring instances.
 *
 * Algorithms in this library are templates over the `Semiring` concept: a
 * type exposing `value_type`, `zero()`, `one()`, `add`, `mul` and a partial
 * `closure` (throwing `errc::closure_undefined` where x* does not exist).
 * `SemiringDescriptor` is the concrete model used by the file formats and the
 * command-line tool; it selects the algebra at run time.
 */

#include <concepts>
#include <string>
#include <utility>

#include "semilin/element.hpp"
#include "semilin/precision.hpp"

namespace semilin {

template <class S>
concept Semiring = std::equality_comparable<typename S::value_type> &&
    requires(const S& s, const typename S::value_type& x, const typename S::value_type& y) {
        { s.zero() } -> std::convertible_to<typename S::value_type>;
        { s.one() } -> std::convertible_to<typename S::value_type>;
        { s.add(x, y) } -> std::convertible_to<typename S::value_type>;
        { s.mul(x, y) } -> std::convertible_to<typename S::value_type>;
        { s.closure(x) } -> std::convertible_to<typename S::value_type>;
    };

template <Semiring S>
using value_t = typename S::value_type;

template <Semiring S>
bool is_idempotent(const S& s) {
    if constexpr (requires { { s.idempotent() } -> std::convertible_to<bool>; }) {
        return s.idempotent();
    } else {
        return false;
    }
}

template <Semiring S>
bool is_commutative(const S& s) {
    if constexpr (requires { { s.commutative() } -> std::convertible_to<bool>; }) {
        return s.commutative();
    } else {
        return false;
    }
}

/// x ≼ y iff x ⊕ y = y. Only meaningful over idempotent semirings.
template <Semiring S>
bool canonical_le(const S& s, const value_t<S>& x, const value_t<S>& y) {
    if (!is_idempotent(s)) throw Error(errc::not_idempotent, "canonical order needs x + x = x");
    return s.add(x, y) == y;
}

class SemiringDescriptor {
public:
    enum class Kind { rational_field, min_plus, max_plus, max_min, boolean, max_times };

    using value_type = Element;

    static SemiringDescriptor rational_field(PrecisionPolicy policy = PrecisionPolicy::exact()) {
        SemiringDescriptor s(Kind::rational_field);
        s.precision_ = std::move(policy);
        return s;
    }
    static SemiringDescriptor min_plus() { return SemiringDescriptor(Kind::min_plus); }
    static SemiringDescriptor max_plus() { return SemiringDescriptor(Kind::max_plus); }
    static SemiringDescriptor boolean() { return SemiringDescriptor(Kind::boolean); }
    static SemiringDescriptor max_times() { return SemiringDescriptor(Kind::max_times); }

    /// Max-min semiring on [a, b]; 𝟎 = a, 𝟏 = b.
    static SemiringDescriptor max_min(Scalar a, Scalar b) {
        if (std::holds_alternative<bool>(a) || std::holds_alternative<bool>(b) ||
            is_infinity(a, Infinity::positive) || is_infinity(b, Infinity::negative) ||
            natural_compare(a, b) != std::strong_ordering::less) {
            throw Error(errc::domain_mismatch, "max-min bounds need a < b");
        }
        SemiringDescriptor s(Kind::max_min);
        s.lower_ = std::move(a);
        s.upper_ = std::move(b);
        return s;
    }

    /// Endpoint-wise interval semiring over an idempotent scalar base.
    static SemiringDescriptor interval_over(const SemiringDescriptor& base) {
        if (base.interval_) throw Error(errc::domain_mismatch, "nested interval semirings");
        if (!base.idempotent()) {
            throw Error(errc::not_idempotent, "interval semirings need an idempotent base");
        }
        SemiringDescriptor s = base;
        s.interval_ = true;
        return s;
    }

    Kind kind() const { return kind_; }
    bool is_interval() const { return interval_; }
    const Scalar& lower_bound() const { return lower_; }
    const Scalar& upper_bound() const { return upper_; }
    const PrecisionPolicy& precision() const { return precision_; }

    /// The scalar semiring underneath an interval semiring (or itself).
    SemiringDescriptor base() const {
        SemiringDescriptor s = *this;
        s.interval_ = false;
        return s;
    }

    /// Precision only affects the rational field; other kinds never round.
    SemiringDescriptor with_precision(PrecisionPolicy policy) const {
        SemiringDescriptor s = *this;
        if (kind_ == Kind::rational_field) s.precision_ = std::move(policy);
        return s;
    }

    bool idempotent() const { return kind_ != Kind::rational_field; }
    bool commutative() const { return true; }

    Element zero() const {
        if (interval_) return Interval{scalar_zero(), scalar_zero()};
        return to_element(scalar_zero());
    }

    Element one() const {
        if (interval_) return Interval{scalar_one(), scalar_one()};
        return to_element(scalar_one());
    }

    bool contains(const Element& x) const {
        if (interval_) {
            const auto* iv = std::get_if<Interval>(&x);
            return iv != nullptr && scalar_contains(iv->lo) && scalar_contains(iv->hi) &&
                   natural_compare(iv->lo, iv->hi) != std::strong_ordering::greater;
        }
        const auto s = to_scalar(x);
        return s.has_value() && scalar_contains(*s);
    }

    Element add(const Element& x, const Element& y) const {
        if (interval_) {
            const auto& [a, b] = interval_pair(x, y);
            return Interval{scalar_add(a.lo, b.lo), scalar_add(a.hi, b.hi)};
        }
        return to_element(scalar_add(checked_scalar(x), checked_scalar(y)));
    }

    Element mul(const Element& x, const Element& y) const {
        if (interval_) {
            const auto& [a, b] = interval_pair(x, y);
            return Interval{scalar_mul(a.lo, b.lo), scalar_mul(a.hi, b.hi)};
        }
        return to_element(scalar_mul(checked_scalar(x), checked_scalar(y)));
    }

    Element closure(const Element& x) const {
        if (interval_) {
            const auto& iv = checked_interval(x);
            return Interval{scalar_closure(iv.lo), scalar_closure(iv.hi)};
        }
        return to_element(scalar_closure(checked_scalar(x)));
    }

    /// Lowercase token used in file headers and on the command line.
    std::string token() const {
        std::string t;
        switch (kind_) {
            case Kind::rational_field: t = "rational"; break;
            case Kind::min_plus: t = "minplus"; break;
            case Kind::max_plus: t = "maxplus"; break;
            case Kind::max_min:
                t = "maxmin:" + format_scalar(lower_) + ":" + format_scalar(upper_);
                break;
            case Kind::boolean: t = "boolean"; break;
            case Kind::max_times: t = "maxtimes"; break;
        }
        return interval_ ? "interval:" + t : t;
    }

    friend bool operator==(const SemiringDescriptor&, const SemiringDescriptor&) = default;

private:
    explicit SemiringDescriptor(Kind kind) : kind_(kind) {}

    Scalar scalar_zero() const {
        switch (kind_) {
            case Kind::rational_field: return Rational{0};
            case Kind::min_plus: return Infinity::positive;
            case Kind::max_plus: return Infinity::negative;
            case Kind::max_min: return lower_;
            case Kind::boolean: return false;
            case Kind::max_times: return Rational{0};
        }
        return Rational{0};
    }

    Scalar scalar_one() const {
        switch (kind_) {
            case Kind::rational_field: return Rational{1};
            case Kind::min_plus:
            case Kind::max_plus: return Rational{0};
            case Kind::max_min: return upper_;
            case Kind::boolean: return true;
            case Kind::max_times: return Rational{1};
        }
        return Rational{1};
    }

    bool scalar_contains(const Scalar& x) const {
        switch (kind_) {
            case Kind::rational_field: return is_rational(x);
            case Kind::min_plus: return is_rational(x) || is_infinity(x, Infinity::positive);
            case Kind::max_plus: return is_rational(x) || is_infinity(x, Infinity::negative);
            case Kind::max_min:
                if (std::holds_alternative<bool>(x)) return false;
                if (std::holds_alternative<Infinity>(x)) return x == lower_ || x == upper_;
                return natural_compare(lower_, x) != std::strong_ordering::greater &&
                       natural_compare(x, upper_) != std::strong_ordering::greater;
            case Kind::boolean: return std::holds_alternative<bool>(x);
            case Kind::max_times: {
                const auto* q = std::get_if<Rational>(&x);
                return q != nullptr && *q >= 0 && *q <= 1;
            }
        }
        return false;
    }

    Scalar checked_scalar(const Element& x) const {
        auto s = to_scalar(x);
        if (!s || !scalar_contains(*s)) {
            throw Error(errc::domain_mismatch, format_element(x) + " is not an element of " + token());
        }
        return *std::move(s);
    }

    const Interval& checked_interval(const Element& x) const {
        if (!contains(x)) {
            throw Error(errc::domain_mismatch, format_element(x) + " is not an element of " + token());
        }
        return std::get<Interval>(x);
    }

    std::pair<const Interval&, const Interval&> interval_pair(const Element& x,
                                                              const Element& y) const {
        return {checked_interval(x), checked_interval(y)};
    }

    static const Scalar& natural_max(const Scalar& a, const Scalar& b) {
        return natural_compare(a, b) == std::strong_ordering::less ? b : a;
    }
    static const Scalar& natural_min(const Scalar& a, const Scalar& b) {
        return natural_compare(b, a) == std::strong_ordering::less ? b : a;
    }

    Rational rounded(Rational q) const {
        if (precision_.rounds()) return round_rational(q, precision_);
        return q;
    }

    Scalar scalar_add(const Scalar& x, const Scalar& y) const {
        switch (kind_) {
            case Kind::rational_field:
                return rounded(std::get<Rational>(x) + std::get<Rational>(y));
            case Kind::min_plus: return natural_min(x, y);
            case Kind::max_plus:
            case Kind::max_min:
            case Kind::max_times: return natural_max(x, y);
            case Kind::boolean: return std::get<bool>(x) || std::get<bool>(y);
        }
        return x;
    }

    Scalar scalar_mul(const Scalar& x, const Scalar& y) const {
        switch (kind_) {
            case Kind::rational_field:
                return rounded(std::get<Rational>(x) * std::get<Rational>(y));
            case Kind::min_plus:
            case Kind::max_plus: {
                // The only infinity in either algebra is its 𝟎, which absorbs.
                if (std::holds_alternative<Infinity>(x)) return x;
                if (std::holds_alternative<Infinity>(y)) return y;
                return Rational{std::get<Rational>(x) + std::get<Rational>(y)};
            }
            case Kind::max_min: return natural_min(x, y);
            case Kind::boolean: return std::get<bool>(x) && std::get<bool>(y);
            case Kind::max_times: return Rational{std::get<Rational>(x) * std::get<Rational>(y)};
        }
        return x;
    }

    Scalar scalar_closure(const Scalar& x) const {
        auto undefined = [&] {
            return Error(errc::closure_undefined,
                         "no closure for " + format_scalar(x) + " over " + base().token());
        };
        switch (kind_) {
            case Kind::rational_field: {
                const auto& q = std::get<Rational>(x);
                if (q == 1) throw undefined();
                return Rational{1 / (1 - q)};
            }
            case Kind::min_plus:
                // 𝟏 ≼ x in the reversed order, i.e. x >= 0 numerically.
                if (is_rational(x) && std::get<Rational>(x) < 0) throw undefined();
                return Rational{0};
            case Kind::max_plus:
                if (is_rational(x) && std::get<Rational>(x) > 0) throw undefined();
                return Rational{0};
            case Kind::max_min: return upper_;
            case Kind::boolean: return true;
            case Kind::max_times: return Rational{1};
        }
        return x;
    }

    Kind kind_;
    bool interval_ = false;
    Scalar lower_ = Rational{0};
    Scalar upper_ = Rational{0};
    PrecisionPolicy precision_;
};

/// Parses a semiring token (`rational`, `minplus`, `maxplus`, `maxmin:a:b`,
/// `boolean`, `maxtimes`, `interval:<token>`).
inline SemiringDescriptor parse_semiring(std::string_view token) {
    constexpr std::string_view interval_prefix = "interval:";
    if (token.starts_with(interval_prefix)) {
        return SemiringDescriptor::interval_over(parse_semiring(token.substr(interval_prefix.size())));
    }
    if (token == "rational") return SemiringDescriptor::rational_field();
    if (token == "minplus") return SemiringDescriptor::min_plus();
    if (token == "maxplus") return SemiringDescriptor::max_plus();
    if (token == "boolean") return SemiringDescriptor::boolean();
    if (token == "maxtimes") return SemiringDescriptor::max_times();
    constexpr std::string_view maxmin_prefix = "maxmin:";
    if (token.starts_with(maxmin_prefix)) {
        const auto rest = token.substr(maxmin_prefix.size());
        // `-inf` contains no colon, so the first colon splits the bounds.
        const auto colon = rest.find(':');
        if (colon != std::string_view::npos) {
            auto a = parse_scalar_literal(rest.substr(0, colon));
            auto b = parse_scalar_literal(rest.substr(colon + 1));
            if (a && b) return SemiringDescriptor::max_min(*a, *b);
        }
    }
    throw Error(errc::unknown_semiring, std::string(token));
}

}  // namespace semilin
