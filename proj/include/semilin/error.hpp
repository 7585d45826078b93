#pragma once

/**
 * @file error.hpp
 * @brief Error codes shared by every semilin module.
 */

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace semilin {

enum class errc {
    domain_mismatch,
    closure_undefined,
    not_idempotent,
    dimension_mismatch,
    not_lower_triangular,
    not_upper_triangular,
    not_square,
    not_symmetric,
    not_commutative,
    non_stabilized,
    singular_matrix,
    parse_error,
    unknown_semiring,
    element_out_of_domain,
    index_out_of_range,
    invalid_weight,
};

constexpr std::string_view to_string(errc code) {
    switch (code) {
        case errc::domain_mismatch: return "domain mismatch";
        case errc::closure_undefined: return "closure undefined";
        case errc::not_idempotent: return "semiring is not idempotent";
        case errc::dimension_mismatch: return "dimension mismatch";
        case errc::not_lower_triangular: return "matrix is not strictly lower triangular";
        case errc::not_upper_triangular: return "matrix is not strictly upper triangular";
        case errc::not_square: return "matrix is not square";
        case errc::not_symmetric: return "matrix is not symmetric";
        case errc::not_commutative: return "semiring is not commutative";
        case errc::non_stabilized: return "iteration did not stabilize";
        case errc::singular_matrix: return "singular matrix";
        case errc::parse_error: return "parse error";
        case errc::unknown_semiring: return "unknown semiring";
        case errc::element_out_of_domain: return "element out of domain";
        case errc::index_out_of_range: return "index out of range";
        case errc::invalid_weight: return "invalid weight";
    }
    return "unknown error";
}

/// Position inside a matrix (row, column), 0-based.
using Position = std::pair<std::size_t, std::size_t>;

/// Position inside a text file (line, column), 1-based.
struct TextLocation {
    std::size_t line = 0;
    std::size_t column = 0;

    bool operator==(const TextLocation&) const = default;
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& detail)
        : std::runtime_error(compose(code, detail)), code_(code), detail_(detail) {}

    Error(errc code, const std::string& detail, Position where)
        : std::runtime_error(compose(code, detail + " at (" + std::to_string(where.first + 1) +
                                               "," + std::to_string(where.second + 1) + ")")),
          code_(code),
          detail_(detail),
          position_(where) {}

    Error(errc code, const std::string& detail, TextLocation where)
        : std::runtime_error(compose(code, "line " + std::to_string(where.line) + ", column " +
                                               std::to_string(where.column) + ": " + detail)),
          code_(code),
          detail_(detail),
          location_(where) {}

    errc code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }
    const std::optional<Position>& position() const noexcept { return position_; }
    const std::optional<TextLocation>& location() const noexcept { return location_; }

private:
    static std::string compose(errc code, const std::string& detail) {
        std::string out(to_string(code));
        if (!detail.empty()) {
            out += ": ";
            out += detail;
        }
        return out;
    }

    errc code_;
    std::string detail_;
    std::optional<Position> position_;
    std::optional<TextLocation> location_;
};

}  // namespace semilin
