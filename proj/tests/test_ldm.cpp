#include <gtest/gtest.h>

#include "semilin/iterative.hpp"
#include "semilin/ldm.hpp"
#include "support/build.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace semilin {
namespace {

using testing::mat;
using testing::Rng;
using testing::vec;
using testing::view;

const auto min_plus = SemiringDescriptor::min_plus();
const auto max_plus = SemiringDescriptor::max_plus();
const auto field = SemiringDescriptor::rational_field();
const auto unit_max_min = SemiringDescriptor::max_min(Rational(0), Rational(1));

DynMatrix strictly_lower(const DynMatrix& a) {
    auto l = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j) l(i, j) = a.semiring().zero();
    return l;
}

DynMatrix strictly_upper(const DynMatrix& a) { return strictly_lower(a.transposed()).transposed(); }

std::vector<Element> fixed_point_rhs(const DynMatrix& a, const std::vector<Element>& x, const std::vector<Element>& b) {
    return vec_add(a.semiring(), view(mat_vec(a, view(x))), view(b));
}

DynMatrix random_minplus(Rng& rng, std::size_t n) {
    return testing::random_matrix(min_plus, n, n, [&] { return testing::random_minplus_weight(rng); });
}

// Forward substitution --------------------------------------------------------

TEST(ForwardSubstitution, ZeroMatrixReturnsRhs) {
    const auto b = vec(min_plus, {"4", "inf", "1"});
    EXPECT_EQ(forward_substitution(DynMatrix(min_plus, 3, 3), view(b)).x, b);
}

TEST(ForwardSubstitution, MinPlusHandEvaluated) {
    const auto l = mat(min_plus, {{"inf", "inf"}, {"3", "inf"}});
    EXPECT_EQ(forward_substitution(l, view(vec(min_plus, {"0", "10"}))).x, vec(min_plus, {"0", "3"}));
}

TEST(ForwardSubstitution, FieldMatchesElimination) {
    const auto l = mat(field, {{"0", "0"}, {"1/2", "0"}});
    const auto expected = testing::solve_identity_minus({{0, 0}, {Rational(1, 2), 0}}, {1, 1});
    const auto x = forward_substitution(l, view(vec(field, {"1", "1"}))).x;
    EXPECT_EQ(x, vec(field, {"1", "3/2"}));
    EXPECT_EQ(x, (std::vector<Element>{expected[0], expected[1]}));
}

TEST(ForwardSubstitution, RejectsEntriesOnOrAboveDiagonal) {
    try {
        forward_substitution(mat(min_plus, {{"inf", "2"}, {"inf", "inf"}}), view(vec(min_plus, {"0", "0"})));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::not_lower_triangular);
        EXPECT_EQ(e.position(), (Position{0, 1}));
    }
    EXPECT_THROW(forward_substitution(mat(min_plus, {{"0", "inf"}, {"inf", "inf"}}), view(vec(min_plus, {"0", "0"}))), Error);
}

// Back substitution -----------------------------------------------------------

TEST(BackSubstitution, ZeroMatrixReturnsRhs) {
    const auto b = vec(min_plus, {"4", "inf", "1"});
    EXPECT_EQ(back_substitution(DynMatrix(min_plus, 3, 3), view(b)).x, b);
}

TEST(BackSubstitution, MinPlusHandEvaluated) {
    const auto m = mat(min_plus, {{"inf", "2"}, {"inf", "inf"}});
    EXPECT_EQ(back_substitution(m, view(vec(min_plus, {"10", "1"}))).x, vec(min_plus, {"3", "1"}));
}

TEST(BackSubstitution, FieldMatchesElimination) {
    const auto m = mat(field, {{"0", "1/2"}, {"0", "0"}});
    const auto expected = testing::solve_identity_minus({{0, Rational(1, 2)}, {0, 0}}, {1, 1});
    const auto x = back_substitution(m, view(vec(field, {"1", "1"}))).x;
    EXPECT_EQ(x, vec(field, {"3/2", "1"}));
    EXPECT_EQ(x, (std::vector<Element>{expected[0], expected[1]}));
}

TEST(BackSubstitution, RejectsEntriesOnOrBelowDiagonal) {
    try {
        back_substitution(mat(min_plus, {{"inf", "inf"}, {"1", "inf"}}), view(vec(min_plus, {"0", "0"})));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::not_upper_triangular);
    }
}

// Each row must read the already solved later unknowns.
TEST(BackSubstitution, ReadsLaterUnknowns) {
    const auto m = mat(min_plus, {{"inf", "1", "inf"}, {"inf", "inf", "1"}, {"inf", "inf", "inf"}});
    EXPECT_EQ(back_substitution(m, view(vec(min_plus, {"inf", "inf", "0"}))).x, vec(min_plus, {"2", "1", "0"}));
}

// Diagonal solve --------------------------------------------------------------

TEST(DiagonalSolve, ZeroDiagonalReturnsRhs) {
    const auto b = vec(min_plus, {"4", "inf"});
    const auto d = vec(min_plus, {"inf", "inf"});
    EXPECT_EQ(diagonal_solve(min_plus, view(d), view(b)).x, b);
}

TEST(DiagonalSolve, MaxMinClosureIsOne) {
    Rng rng(10);
    for (int t = 0; t < 20; ++t) {
        const auto d = testing::random_vector(4, [&] { return testing::random_element(unit_max_min, rng); });
        const auto b = testing::random_vector(4, [&] { return testing::random_element(unit_max_min, rng); });
        EXPECT_EQ(diagonal_solve(unit_max_min, view(d), view(b)).x, b);
    }
}

TEST(DiagonalSolve, MaxPlusPositiveEntryFails) {
    try {
        diagonal_solve(max_plus, view(vec(max_plus, {"1"})), view(vec(max_plus, {"0"})));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::closure_undefined);
        EXPECT_EQ(e.position(), (Position{0, 0}));
    }
}

// ldm_solve -------------------------------------------------------------------

TEST(LdmSolve, TrivialFactorsReturnRhs) {
    const LdmFactors<SemiringDescriptor> f{DynMatrix(min_plus, 3, 3), vec(min_plus, {"inf", "inf", "inf"}),
                                           DynMatrix(min_plus, 3, 3)};
    const auto b = vec(min_plus, {"1", "2", "inf"});
    EXPECT_EQ(ldm_solve(f, view(b)).x, b);
}

TEST(LdmSolve, MinPlusChainsThreeStages) {
    const LdmFactors<SemiringDescriptor> f{mat(min_plus, {{"inf", "inf"}, {"3", "inf"}}), vec(min_plus, {"inf", "inf"}),
                                           mat(min_plus, {{"inf", "2"}, {"inf", "inf"}})};
    EXPECT_EQ(ldm_solve(f, view(vec(min_plus, {"0", "10"}))).x, vec(min_plus, {"0", "3"}));
}

TEST(LdmSolve, FieldFactorsOfLowerMatrix) {
    const auto a = mat(field, {{"0", "0"}, {"1/2", "0"}});
    const LdmFactors<SemiringDescriptor> f{a, vec(field, {"0", "0"}), DynMatrix(field, 2, 2)};
    const auto x = ldm_solve(f, view(vec(field, {"1", "1"}))).x;
    EXPECT_EQ(x, vec(field, {"1", "3/2"}));
    const auto star = field_matrix_star(a);
    EXPECT_EQ(x, mat_vec(star, view(vec(field, {"1", "1"}))));
}

// ldm_factorize ---------------------------------------------------------------

TEST(LdmFactorize, ZeroMatrix) {
    const auto f = ldm_factorize(DynMatrix(min_plus, 4, 4)).factors;
    EXPECT_EQ(f.lower, DynMatrix(min_plus, 4, 4));
    EXPECT_EQ(f.upper, DynMatrix(min_plus, 4, 4));
    EXPECT_EQ(f.diagonal, std::vector<Element>(4, min_plus.zero()));
}

TEST(LdmFactorize, DiagonalMatrix) {
    auto a = DynMatrix(min_plus, 3, 3);
    a(0, 0) = Rational(2);
    a(1, 1) = Rational(0);
    a(2, 2) = Rational(5);
    const auto f = ldm_factorize(a).factors;
    EXPECT_EQ(f.lower, DynMatrix(min_plus, 3, 3));
    EXPECT_EQ(f.upper, DynMatrix(min_plus, 3, 3));
    EXPECT_EQ(f.diagonal, vec(min_plus, {"2", "0", "5"}));
}

TEST(LdmFactorize, ProbesReconstructSeriesClosure) {
    Rng rng(12);
    for (int t = 0; t < 25; ++t) {
        const auto a = random_minplus(rng, 4);
        const auto f = ldm_factorize(a).factors;
        const auto star = closure_series(a);
        for (std::size_t j = 0; j < 4; ++j) {
            const auto e = unit_vector(min_plus, 4, j);
            EXPECT_EQ(ldm_solve(f, view(e)).x, star.column_values(j));
        }
        EXPECT_EQ(closure_ldm(a), star);
    }
}

TEST(LdmFactorize, PackedLayout) {
    Rng rng(13);
    const auto a = random_minplus(rng, 5);
    const auto packed = ldm_factorize_packed(a).packed;
    const auto f = unpack_ldm(packed);
    EXPECT_EQ(pack_ldm(f), packed);
    EXPECT_EQ(f.lower, strictly_lower(packed));
    EXPECT_EQ(f.upper, strictly_upper(packed));
}

TEST(LdmFactorize, ClosureFailureAborts) {
    const auto a = mat(max_plus, {{"-1", "0"}, {"0", "-1"}});  // cycle 1->2->1 of weight 0 is fine
    EXPECT_NO_THROW(ldm_factorize(a));
    const auto b = mat(max_plus, {{"-1", "2"}, {"1", "-1"}});  // cycle weight 3 > 0
    try {
        ldm_factorize(b);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::closure_undefined);
        EXPECT_EQ(e.position(), (Position{1, 1}));
    }
}

TEST(LdmFactorize, NotSquare) {
    try {
        ldm_factorize(DynMatrix(min_plus, 2, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::not_square);
    }
}

// Operation counts ------------------------------------------------------------

TEST(OperationCounts, MatchClosedForms) {
    Rng rng(14);
    for (std::uint64_t n = 1; n <= 8; ++n) {
        for (int t = 0; t < 5; ++t) {
            const auto a = random_minplus(rng, n);
            const auto b = testing::random_vector(n, [&] { return testing::random_minplus_weight(rng); });
            const auto fact = ldm_factorize(a);
            EXPECT_EQ(fact.counts, (OpCountReport{(2 * n * n * n - 3 * n * n + n) / 6,
                                                  (2 * n * n * n + 3 * n * n - 5 * n) / 6, n * (n + 1) / 2}));
            EXPECT_EQ(ldm_solve(fact.factors, view(b)).counts, (OpCountReport{n * n - n, n * n, n}));
            const OpCountReport tri{(n * n - n) / 2, (n * n - n) / 2, 0};
            EXPECT_EQ(forward_substitution(fact.factors.lower, view(b)).counts, tri);
            EXPECT_EQ(back_substitution(fact.factors.upper, view(b)).counts, tri);
            EXPECT_EQ(diagonal_solve(min_plus, view(fact.factors.diagonal), view(b)).counts, (OpCountReport{0, n, n}));
        }
    }
}

// Fixed-point contracts -------------------------------------------------------

TEST(FixedPoints, EachStageSolvesItsEquation) {
    Rng rng(15);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + t % 6;
        const auto a = random_minplus(rng, n);
        const auto b = testing::random_vector(n, [&] { return testing::random_minplus_weight(rng); });
        const auto l = strictly_lower(a);
        const auto m = strictly_upper(a);
        const auto x_l = forward_substitution(l, view(b)).x;
        EXPECT_EQ(x_l, fixed_point_rhs(l, x_l, b));
        const auto x_m = back_substitution(m, view(b)).x;
        EXPECT_EQ(x_m, fixed_point_rhs(m, x_m, b));
        auto d = DynMatrix(min_plus, n, n);
        std::vector<Element> diag;
        for (std::size_t i = 0; i < n; ++i) diag.push_back(d(i, i) = a(i, i));
        const auto x_d = diagonal_solve(min_plus, view(diag), view(b)).x;
        EXPECT_EQ(x_d, fixed_point_rhs(d, x_d, b));
        const auto x = ldm_solve(ldm_factorize(a).factors, view(b)).x;
        EXPECT_EQ(x, fixed_point_rhs(a, x, b));
    }
}

TEST(FactorSolve, AgreesWithSeriesAcrossIdempotentSemirings) {
    Rng rng(16);
    const SemiringDescriptor kinds[] = {min_plus, unit_max_min, SemiringDescriptor::boolean(),
                                        SemiringDescriptor::max_times(),
                                        SemiringDescriptor::interval_over(unit_max_min)};
    for (const auto& s : kinds) {
        for (int t = 0; t < 30; ++t) {
            const std::size_t n = 1 + t % 5;
            auto gen = [&] {
                return s == min_plus ? testing::random_minplus_weight(rng) : testing::random_element(s, rng);
            };
            const auto a = testing::random_matrix(s, n, n, gen);
            const auto b = testing::random_vector(n, gen);
            const auto x = ldm_solve(ldm_factorize(a).factors, view(b)).x;
            EXPECT_EQ(x, mat_vec(closure_series(a, 64), view(b))) << s.token();
        }
    }
}

TEST(FactorSolve, FieldAgreesWithExactInverse) {
    Rng rng(17);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + t % 5;
        const auto a = testing::random_matrix(field, n, n, [&] { return Element{testing::random_rational(rng, -1, 1, 16) / 4}; });
        const auto b = testing::random_vector(n, [&] { return Element{testing::random_rational(rng, -3, 3, 5)}; });
        const auto x = ldm_solve(ldm_factorize(a).factors, view(b)).x;
        EXPECT_EQ(x, mat_vec(field_matrix_star(a), view(b)));
    }
}

// Symmetric variant -----------------------------------------------------------

DynMatrix random_symmetric_minplus(Rng& rng, std::size_t n) {
    auto a = random_minplus(rng, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) a(i, j) = a(j, i);
    return a;
}

TEST(SymmetricFactorize, TrivialCases) {
    const auto zero = DynMatrix(min_plus, 3, 3);
    EXPECT_EQ(ldm_factorize_symmetric(zero).factors, ldm_factorize(zero).factors);
    auto diag = zero;
    diag(0, 0) = Rational(1);
    diag(2, 2) = Rational(4);
    EXPECT_EQ(ldm_factorize_symmetric(diag).factors, ldm_factorize(diag).factors);
}

TEST(SymmetricFactorize, MatchesGeneralWithFewerMultiplications) {
    Rng rng(18);
    for (std::size_t n = 1; n <= 8; ++n) {
        for (int t = 0; t < 10; ++t) {
            const auto a = random_symmetric_minplus(rng, n);
            const auto general = ldm_factorize(a);
            const auto sym = ldm_factorize_symmetric(a);
            EXPECT_EQ(sym.factors, general.factors);
            EXPECT_EQ(sym.factors.upper, sym.factors.lower.transposed());
            if (n >= 3) {
                EXPECT_LT(sym.counts.muls, general.counts.muls);
            }
            EXPECT_LE(sym.counts.adds, general.counts.adds);
        }
    }
}

TEST(SymmetricFactorize, FieldMatchesGeneral) {
    Rng rng(19);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 1 + t % 5;
        auto a = testing::random_matrix(field, n, n, [&] { return Element{testing::random_rational(rng, -1, 1, 8) / 4}; });
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) a(i, j) = a(j, i);
        EXPECT_EQ(ldm_factorize_symmetric(a).factors, ldm_factorize(a).factors);
    }
}

TEST(SymmetricFactorize, RejectsAsymmetricInput) {
    try {
        ldm_factorize_symmetric(mat(min_plus, {{"0", "1"}, {"2", "0"}}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::not_symmetric);
    }
}

struct NoncommutativeTag {
    using value_type = long;
    long zero() const { return 0; }
    long one() const { return 1; }
    long add(long a, long b) const { return a + b; }
    long mul(long a, long b) const { return a * b; }
    long closure(long) const { throw Error(errc::closure_undefined, "none"); }
    bool operator==(const NoncommutativeTag&) const = default;
};

TEST(SymmetricFactorize, RequiresCommutativeSemiring) {
    Matrix<NoncommutativeTag> a(NoncommutativeTag{}, 2, 2);
    try {
        ldm_factorize_symmetric(a);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), errc::not_commutative);
    }
}

}  // namespace
}  // namespace semilin
