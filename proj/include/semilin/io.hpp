#pragma once

/**
 * @file io.hpp
 * @brief Text format for matrices and vectors over a runtime semiring.
 *
 *     semiring: minplus
 *     2 3
 *     0 7 inf
 *     1/2 -3 0.25
 *
 * Element literals are `p/q`, integers, decimals (read exactly), `inf`,
 * `-inf`, `0`/`1` for booleans and `[lo,hi]` over interval semirings.
 * Serialization writes the canonical form: reduced `p/q`, single spaces, one
 * trailing newline. Vectors are one-column matrices.
 */

#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "semilin/interval.hpp"
#include "semilin/matrix.hpp"

namespace semilin {

using DynMatrix = Matrix<SemiringDescriptor>;

struct Token {
    std::string_view text;
    TextLocation where;
};

namespace detail {

inline std::vector<Token> split_tokens(std::string_view line, std::size_t line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), {line_no, start + 1}});
    }
    return out;
}

/// Non-blank lines, tokenized, with 1-based line numbers.
inline std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++line_no;
        auto tokens = split_tokens(text.substr(pos, end - pos), line_no);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return lines;
}

inline std::size_t parse_count(const Token& tok, const char* what) {
    if (!all_digits(tok.text) || tok.text.size() > 9) {
        throw Error(errc::parse_error, std::string("expected ") + what + ", got '" + std::string(tok.text) + "'", tok.where);
    }
    return static_cast<std::size_t>(std::stoul(std::string(tok.text)));
}

inline Scalar parse_scalar_token(const SemiringDescriptor& base, std::string_view text, TextLocation where) {
    std::optional<Scalar> value;
    if (base.kind() == SemiringDescriptor::Kind::boolean) {
        if (text == "0") value = Scalar{false};
        else if (text == "1") value = Scalar{true};
        else if (parse_scalar_literal(text)) {
            throw Error(errc::element_out_of_domain, "'" + std::string(text) + "' is not a boolean", where);
        }
    } else {
        value = parse_scalar_literal(text);
    }
    if (!value) throw Error(errc::parse_error, "malformed element '" + std::string(text) + "'", where);
    if (!base.contains(to_element(*value))) {
        throw Error(errc::element_out_of_domain, "'" + std::string(text) + "' is not in " + base.token(), where);
    }
    return *std::move(value);
}

}  // namespace detail

/// Parses one element literal for semiring `s`.
inline Element parse_element(const SemiringDescriptor& s, std::string_view text, TextLocation where = {1, 1}) {
    const bool bracketed = text.size() >= 2 && text.front() == '[' && text.back() == ']';
    if (!s.is_interval()) {
        if (bracketed) {
            throw Error(errc::element_out_of_domain, "interval literal over scalar semiring " + s.token(), where);
        }
        return to_element(detail::parse_scalar_token(s, text, where));
    }
    if (!bracketed) throw Error(errc::parse_error, "expected an interval literal [lo,hi]", where);
    const auto inner = text.substr(1, text.size() - 2);
    const auto comma = inner.find(',');
    if (comma == std::string_view::npos) throw Error(errc::parse_error, "interval literal needs a comma", where);
    const auto base = s.base();
    Interval iv{detail::parse_scalar_token(base, inner.substr(0, comma), where),
                detail::parse_scalar_token(base, inner.substr(comma + 1), where)};
    if (!s.contains(iv)) {
        throw Error(errc::element_out_of_domain, "interval endpoints out of order in '" + std::string(text) + "'", where);
    }
    return iv;
}

inline DynMatrix parse_matrix_file(std::string_view text) {
    const auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw Error(errc::parse_error, "empty matrix file", TextLocation{1, 1});

    const auto& header = lines[0];
    std::string_view token;
    if (header[0].text == "semiring:" && header.size() == 2) {
        token = header[1].text;
    } else if (header.size() == 1 && header[0].text.starts_with("semiring:")) {
        token = header[0].text.substr(9);
    } else {
        throw Error(errc::parse_error, "expected 'semiring: <token>'", header[0].where);
    }
    const auto s = parse_semiring(token);

    if (lines.size() < 2) throw Error(errc::parse_error, "missing 'rows cols' line", TextLocation{header[0].where.line + 1, 1});
    const auto& shape = lines[1];
    if (shape.size() != 2) throw Error(errc::parse_error, "expected 'rows cols'", shape[0].where);
    const std::size_t rows = detail::parse_count(shape[0], "row count");
    const std::size_t cols = detail::parse_count(shape[1], "column count");
    if (rows == 0 || cols == 0) throw Error(errc::parse_error, "matrix dimensions must be positive", shape[0].where);

    if (lines.size() != rows + 2) {
        const TextLocation where = lines.size() > rows + 2 ? lines[rows + 2][0].where
                                                           : TextLocation{lines.back()[0].where.line + 1, 1};
        throw Error(errc::parse_error, "expected " + std::to_string(rows) + " matrix rows, found " +
                                           std::to_string(lines.size() - 2), where);
    }
    std::vector<Element> data;
    data.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& row = lines[r + 2];
        if (row.size() != cols) {
            throw Error(errc::parse_error, "expected " + std::to_string(cols) + " entries, found " +
                                               std::to_string(row.size()), row[0].where);
        }
        for (const auto& tok : row) data.push_back(parse_element(s, tok.text, tok.where));
    }
    return DynMatrix(s, rows, cols, std::move(data));
}

inline std::string serialize_matrix(const DynMatrix& m) {
    std::ostringstream out;
    out << "semiring: " << m.semiring().token() << '\n' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j != 0) out << ' ';
            out << format_element(m(i, j));
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace semilin
