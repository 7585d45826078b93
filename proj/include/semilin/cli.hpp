#pragma once

/**
 * @file cli.hpp
 * @brief The `semilin` command-line tool, callable in-process for testing.
 *
 * Exit status: 0 on success, 1 when the problem has no stable solution
 * (undefined closure, no fixed point, singular I - A, asymmetric input to
 * the symmetric factorization), 2 on usage, parse and shape errors.
 */

#include <CLI11.hpp>

#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "semilin/graph.hpp"
#include "semilin/io.hpp"
#include "semilin/iterative.hpp"
#include "semilin/ldm.hpp"

namespace semilin::cli {

enum class Method { ldm, jacobi, gauss_seidel, series, field_star };

inline Method parse_method(const std::string& name) {
    if (name == "ldm") return Method::ldm;
    if (name == "jacobi") return Method::jacobi;
    if (name == "gauss-seidel") return Method::gauss_seidel;
    if (name == "series") return Method::series;
    return Method::field_star;
}

inline int exit_code_for(errc code) {
    switch (code) {
        case errc::closure_undefined:
        case errc::non_stabilized:
        case errc::singular_matrix:
        case errc::not_symmetric:
        case errc::not_commutative: return 1;
        default: return 2;
    }
}

struct Solved {
    DynMatrix x;
    OpCountReport counts;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::parse_error, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline DynMatrix with_epsilon(const DynMatrix& m, const std::optional<std::string>& epsilon) {
    if (!epsilon) return m;
    const auto eps = parse_rational(*epsilon);
    if (!eps || *eps < 0) throw Error(errc::parse_error, "--epsilon expects a nonnegative rational, got '" + *epsilon + "'");
    return m.rebound(m.semiring().with_precision(PrecisionPolicy::round_each_op(*eps)));
}

/// Right-hand side must live over the same algebra as A.
inline DynMatrix align_rhs(const DynMatrix& a, const DynMatrix& b) {
    if (!(a.semiring().with_precision(PrecisionPolicy::exact()) == b.semiring())) {
        throw Error(errc::domain_mismatch, "right-hand side is over " + b.semiring().token() + ", matrix over " +
                                               a.semiring().token());
    }
    if (b.rows() != a.rows()) throw Error(errc::dimension_mismatch, "right-hand side has " + std::to_string(b.rows()) + " rows");
    return b.rebound(a.semiring());
}

inline DynMatrix counted_product(const DynMatrix& a, const DynMatrix& b, OpCountReport& counts) {
    Counting<SemiringDescriptor> ops(a.semiring(), counts);
    DynMatrix c(a.semiring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            auto acc = ops.zero();
            for (std::size_t k = 0; k < a.cols(); ++k) acc = ops.add(acc, ops.mul(a(i, k), b(k, j)));
            c(i, j) = std::move(acc);
        }
    return c;
}

}  // namespace detail

/// X = A* ⊙ B by the chosen method, column by column for iterative methods.
inline Solved solve_system(const DynMatrix& a, const DynMatrix& b, Method method, std::size_t limit) {
    if (!a.square()) throw Error(errc::not_square, "coefficient matrix");
    Solved out{DynMatrix(a.semiring(), a.rows(), b.cols()), {}};
    switch (method) {
        case Method::ldm: {
            auto fact = ldm_factorize(a);
            out.counts += fact.counts;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const auto col = b.column_values(j);
                auto sol = ldm_solve(fact.factors, std::span<const Element>(col));
                out.counts += sol.counts;
                out.x.set_column(j, sol.x);
            }
            break;
        }
        case Method::jacobi:
        case Method::gauss_seidel:
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const auto col = b.column_values(j);
                auto sol = method == Method::jacobi ? jacobi_solve(a, std::span<const Element>(col), limit)
                                                    : gauss_seidel_solve(a, std::span<const Element>(col), limit);
                out.counts += sol.counts;
                out.x.set_column(j, sol.solution);
            }
            break;
        case Method::series: {
            const auto star = closure_series(a, limit, &out.counts);
            out.x = detail::counted_product(star, b, out.counts);
            break;
        }
        case Method::field_star: {
            const auto star = field_matrix_star(a);
            out.x = detail::counted_product(star, b, out.counts);
            break;
        }
    }
    return out;
}

inline Solved closure_of(const DynMatrix& a, Method method, std::size_t limit) {
    if (!a.square()) throw Error(errc::not_square, "closure needs a square matrix");
    switch (method) {
        case Method::series: {
            Solved out{a, {}};
            out.x = closure_series(a, limit, &out.counts);
            return out;
        }
        case Method::field_star: return {field_matrix_star(a), {}};
        default: return solve_system(a, DynMatrix::identity(a.semiring(), a.rows()), method, limit);
    }
}

/// Runs the tool. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Linear algebra over semirings: Bellman equations X = A X + B and path problems."};
    app.name("semilin");
    app.require_subcommand(1);

    const std::vector<std::string> methods{"ldm", "jacobi", "gauss-seidel", "series", "field-star"};
    std::string method_name;
    std::size_t limit = 0;
    std::optional<std::string> epsilon;
    bool show_counts = false;
    std::string matrix_path;
    std::string rhs_path;

    auto add_common = [&](CLI::App* sub, const std::string& default_method) {
        method_name = default_method;
        sub->add_option("--method", method_name, "Solution method")->check(CLI::IsMember(methods));
        sub->add_option("--limit", limit, "Maximum sweeps / series terms (default: matrix order)");
        sub->add_option("--epsilon", epsilon, "Round every rational + and * to within p/q");
        sub->add_flag("--counts", show_counts, "Append 'adds= muls= closures=' to standard error");
    };

    auto* solve = app.add_subcommand("solve", "Solve X = A X + B for matrix and right-hand side files");
    solve->add_option("matrix", matrix_path, "Matrix file")->required();
    solve->add_option("rhs", rhs_path, "Right-hand side file (n x k)")->required();
    add_common(solve, "ldm");

    auto* closure = app.add_subcommand("closure", "Print A* = I + A + A^2 + ...");
    std::string closure_method = "series";
    closure->add_option("matrix", matrix_path, "Matrix file")->required();
    closure->add_option("--method", closure_method, "Closure method")->check(CLI::IsMember(methods));
    closure->add_option("--limit", limit, "Maximum series terms / sweeps (default: matrix order)");
    closure->add_option("--epsilon", epsilon, "Round every rational + and * to within p/q");
    closure->add_flag("--counts", show_counts, "Append 'adds= muls= closures=' to standard error");

    auto* factor = app.add_subcommand("factor", "Print the packed LDM factorization and its operation counts");
    bool symmetric = false;
    factor->add_option("matrix", matrix_path, "Matrix file")->required();
    factor->add_flag("--symmetric", symmetric, "Use the symmetric variant (M = L^T)");
    factor->add_option("--epsilon", epsilon, "Round every rational + and * to within p/q");

    auto* path = app.add_subcommand(
        "path",
        "Optimal path values from every node to --target (arc u->v in row u). Reverse the arcs for single-source.");
    std::string problem_name;
    std::size_t target = 0;
    std::string path_method = "ldm";
    path->add_option("graph", matrix_path, "Graph file ('n m' then 'u v w' lines)")->required();
    path->add_option("--problem", problem_name, "Path problem")
        ->required()
        ->check(CLI::IsMember({"shortest", "widest", "reliable", "reach"}));
    path->add_option("--target", target, "Target node (1-based)")->required();
    path->add_option("--method", path_method, "Solution method")->check(CLI::IsMember(methods));
    path->add_option("--limit", limit, "Maximum sweeps / series terms (default: node count)");
    path->add_flag("--counts", show_counts, "Append 'adds= muls= closures=' to standard error");

    auto* counts = app.add_subcommand("counts", "Print the operation counts of one algorithm run");
    std::string op_name = "factor";
    counts->add_option("matrix", matrix_path, "Matrix file")->required();
    counts->add_option("rhs", rhs_path, "Right-hand side vector file");
    counts->add_option("--op", op_name, "Algorithm")
        ->check(CLI::IsMember({"factor", "factor-symmetric", "solve", "forward", "back", "diagonal"}));
    counts->add_option("--epsilon", epsilon, "Round every rational + and * to within p/q");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            const auto a = detail::with_epsilon(parse_matrix_file(detail::read_file(matrix_path)), epsilon);
            const auto b = detail::align_rhs(a, parse_matrix_file(detail::read_file(rhs_path)));
            const auto result = solve_system(a, b, parse_method(method_name), limit);
            out << serialize_matrix(result.x);
            if (show_counts) err << to_string(result.counts) << '\n';
        } else if (closure->parsed()) {
            const auto a = detail::with_epsilon(parse_matrix_file(detail::read_file(matrix_path)), epsilon);
            const auto result = closure_of(a, parse_method(closure_method), limit);
            out << serialize_matrix(result.x);
            if (show_counts) err << to_string(result.counts) << '\n';
        } else if (factor->parsed()) {
            const auto a = detail::with_epsilon(parse_matrix_file(detail::read_file(matrix_path)), epsilon);
            const auto result = symmetric ? ldm_factorize_symmetric_packed(a) : ldm_factorize_packed(a);
            out << serialize_matrix(result.packed) << to_string(result.counts) << '\n';
        } else if (path->parsed()) {
            PathProblem problem;
            if (problem_name == "shortest") problem.kind = PathProblem::Kind::shortest;
            else if (problem_name == "widest") problem.kind = PathProblem::Kind::widest;
            else if (problem_name == "reliable") problem.kind = PathProblem::Kind::most_reliable;
            else problem.kind = PathProblem::Kind::reachability;
            problem.target = target;
            const auto system = graph_to_bellman(parse_graph_file(detail::read_file(matrix_path)), problem);
            const auto result = solve_system(system.a, DynMatrix::column(system.semiring, system.b),
                                             parse_method(path_method), limit);
            out << serialize_matrix(result.x);
            if (show_counts) err << to_string(result.counts) << '\n';
        } else if (counts->parsed()) {
            const auto a = detail::with_epsilon(parse_matrix_file(detail::read_file(matrix_path)), epsilon);
            std::vector<Element> rhs;
            const bool needs_rhs = op_name != "factor" && op_name != "factor-symmetric";
            if (needs_rhs) {
                if (rhs_path.empty()) {
                    err << "semilin: --op " << op_name << " needs a right-hand side vector file\n";
                    return 2;
                }
                const auto b = detail::align_rhs(a, parse_matrix_file(detail::read_file(rhs_path)));
                if (b.cols() != 1) throw Error(errc::dimension_mismatch, "right-hand side must be a vector");
                rhs = b.column_values(0);
            }
            const std::span<const Element> b(rhs);
            OpCountReport report;
            if (op_name == "factor") {
                report = ldm_factorize_packed(a).counts;
            } else if (op_name == "factor-symmetric") {
                report = ldm_factorize_symmetric_packed(a).counts;
            } else if (op_name == "solve") {
                report = ldm_solve(ldm_factorize(a).factors, b).counts;
            } else if (op_name == "forward") {
                report = forward_substitution(a, b).counts;
            } else if (op_name == "back") {
                report = back_substitution(a, b).counts;
            } else {
                if (!a.square()) throw Error(errc::not_square, "diagonal matrix");
                std::vector<Element> d;
                for (std::size_t i = 0; i < a.rows(); ++i) d.push_back(a(i, i));
                report = diagonal_solve(a.semiring(), std::span<const Element>(d), b).counts;
            }
            out << to_string(report) << '\n';
        }
    } catch (const Error& e) {
        const int code = exit_code_for(e.code());
        err << "semilin: " << (code == 1 ? "no stable solution: " : "") << e.what() << '\n';
        return code;
    }
    return 0;
}

}  // namespace semilin::cli
