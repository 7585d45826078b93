#pragma once

/**
 * @file element.hpp
 * @brief Values carried by the runtime semirings: exact rationals, infinity
 *        markers, booleans and closed intervals of those.
 *
 * There is no floating point anywhere in the value layer; every comparison is
 * structural on canonical rationals.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "semilin/error.hpp"

namespace semilin {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Infinity { negative, positive };

/// A non-interval value.
using Scalar = std::variant<Rational, Infinity, bool>;

/// Closed interval; `lo` precedes `hi` in the natural numeric order.
struct Interval {
    Scalar lo;
    Scalar hi;

    friend bool operator==(const Interval&, const Interval&) = default;
};

using Element = std::variant<Rational, Infinity, bool, Interval>;

inline Element to_element(const Scalar& s) {
    return std::visit([](const auto& v) -> Element { return v; }, s);
}

inline std::optional<Scalar> to_scalar(const Element& e) {
    return std::visit(
        [](const auto& v) -> std::optional<Scalar> {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Interval>) {
                return std::nullopt;
            } else {
                return Scalar{v};
            }
        },
        e);
}

inline bool is_rational(const Scalar& s) { return std::holds_alternative<Rational>(s); }
inline bool is_infinity(const Scalar& s, Infinity which) {
    const auto* p = std::get_if<Infinity>(&s);
    return p != nullptr && *p == which;
}

/// Natural order on extended rationals (-inf < q < +inf) and on booleans
/// (false < true). Mixed boolean/number comparisons are a domain mismatch.
inline std::strong_ordering natural_compare(const Scalar& a, const Scalar& b) {
    if (std::holds_alternative<bool>(a) || std::holds_alternative<bool>(b)) {
        if (!std::holds_alternative<bool>(a) || !std::holds_alternative<bool>(b)) {
            throw Error(errc::domain_mismatch, "cannot order a boolean against a number");
        }
        return std::get<bool>(a) <=> std::get<bool>(b);
    }
    auto rank = [](const Scalar& s) {
        if (const auto* inf = std::get_if<Infinity>(&s)) {
            return *inf == Infinity::negative ? -1 : 1;
        }
        return 0;
    };
    const int ra = rank(a);
    const int rb = rank(b);
    if (ra != 0 || rb != 0) return ra <=> rb;
    const auto& qa = std::get<Rational>(a);
    const auto& qb = std::get<Rational>(b);
    if (qa < qb) return std::strong_ordering::less;
    if (qb < qa) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Text form

inline std::string format_rational(const Rational& q) {
    const Integer num = boost::multiprecision::numerator(q);
    const Integer den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline std::string format_scalar(const Scalar& s) {
    struct visitor {
        std::string operator()(const Rational& q) const { return format_rational(q); }
        std::string operator()(Infinity inf) const {
            return inf == Infinity::positive ? "inf" : "-inf";
        }
        std::string operator()(bool b) const { return b ? "1" : "0"; }
    };
    return std::visit(visitor{}, s);
}

inline std::string format_element(const Element& e) {
    if (const auto* iv = std::get_if<Interval>(&e)) {
        return "[" + format_scalar(iv->lo) + "," + format_scalar(iv->hi) + "]";
    }
    return format_scalar(*to_scalar(e));
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace detail

/// Parses `p`, `p/q` or a decimal `p.ddd` exactly. Returns nullopt on
/// malformed input or a zero denominator.
inline std::optional<Rational> parse_rational(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) return std::nullopt;
        const Integer d{std::string(den)};
        if (d == 0) return std::nullopt;
        value = Rational(Integer{std::string(num)}, d);
    } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (!detail::all_digits(whole) || !detail::all_digits(frac)) return std::nullopt;
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(Integer{std::string(whole) + std::string(frac)}, scale);
    } else {
        if (!detail::all_digits(text)) return std::nullopt;
        value = Rational(Integer{std::string(text)});
    }
    return negative ? Rational(-value) : value;
}

/// Parses a scalar literal without reference to any semiring: `inf`, `-inf`
/// or an exact rational.
inline std::optional<Scalar> parse_scalar_literal(std::string_view text) {
    if (text == "inf" || text == "+inf") return Scalar{Infinity::positive};
    if (text == "-inf") return Scalar{Infinity::negative};
    if (auto q = parse_rational(text)) return Scalar{*q};
    return std::nullopt;
}

}  // namespace semilin
