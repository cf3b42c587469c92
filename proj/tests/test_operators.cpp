#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "vlogic/verify.hpp"

using namespace vlogic;
using vlogic::fixtures::cd;
using vlogic::fixtures::gen;
using vlogic::fixtures::scaled;

namespace {

cvector vec(const rvector& v) { return complexify(v); }

TEST(Matrix, ConstructionAndShape) {
    const complex_matrix m{{1, 2, 3}, {4, 5, 6}};
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m(1, 2), cd(6));
    EXPECT_THROW(complex_matrix(2, 2, std::vector<cd>(3)), dimension_mismatch);
    EXPECT_THROW((complex_matrix{{1, 2}, {3}}), dimension_mismatch);
    EXPECT_THROW(m * m, dimension_mismatch);
    EXPECT_THROW(matvec(m, cvector(2)), dimension_mismatch);
    EXPECT_THROW(power(m, 2), non_square);
}

TEST(Kron, WorkedExample) {
    const complex_matrix u{{1, 0}, {2, -1}};
    const complex_matrix v{{1, -1, 4}, {3, 1, 0}};
    const complex_matrix expected{{1, -1, 4, 0, 0, 0},
                                  {3, 1, 0, 0, 0, 0},
                                  {2, -2, 8, -1, 1, -4},
                                  {6, 2, 0, -3, -1, 0}};
    EXPECT_EQ(kron(u, v), expected);
}

TEST(Kron, ScalarUnit) {
    const complex_matrix one{{1}};
    const complex_matrix v{{1, -1, 4}, {3, 1, 0}};
    EXPECT_EQ(kron(one, v), v);
    EXPECT_EQ(kron(v, one), v);
}

// (a kron b)^T (c kron d) = <a,c><b,d>, both sides evaluated numerically.
TEST(Kron, InnerProductFactorizes) {
    gen g(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = vec(g.real_vector(3)), b = vec(g.real_vector(3));
        const auto c = vec(g.real_vector(3)), d = vec(g.real_vector(3));
        EXPECT_NEAR(std::abs(dot(kron(a, b), kron(c, d)) - dot(a, c) * dot(b, d)), 0.0, 1e-14);
    }
}

TEST(Kron, MixedProductAndTransposeLaws) {
    gen g(12);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t p = g.integer(1, 4), q = g.integer(1, 4), r = g.integer(1, 4);
        const std::size_t s = g.integer(1, 4), t = g.integer(1, 4), w = g.integer(1, 4);
        const auto u = g.matrix(p, q), u2 = g.matrix(q, r);
        const auto v = g.matrix(s, t), v2 = g.matrix(t, w);
        EXPECT_LT(max_abs_diff(kron(u, v) * kron(u2, v2), kron(u * u2, v * v2)), 1e-13);
        EXPECT_EQ(transpose(kron(u, v)), kron(transpose(u), transpose(v)));
    }
}

TEST(Kron, MulKronMatchesDenseProduct) {
    gen g(13);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t p = g.integer(1, 4), q = g.integer(1, 4);
        const auto u = g.matrix(p, g.integer(1, 4));
        const auto v = g.matrix(q, g.integer(1, 4));
        const auto t = g.matrix(g.integer(1, 4), p * q);
        EXPECT_LT(max_abs_diff(mul_kron(t, u, v), t * kron(u, v)), 1e-13);
    }
    EXPECT_THROW(mul_kron(g.matrix(2, 5), g.matrix(2, 2), g.matrix(2, 2)), dimension_mismatch);
}

TEST(MonadicOperator, Set1AndSet2Negation) {
    const complex_matrix n1{{0, 1}, {1, 0}};
    const complex_matrix n2{{1, 0}, {0, -1}};
    const complex_matrix id{{1, 0}, {0, 1}};
    EXPECT_LT(max_abs_diff(monadic_operator(canonical_basis("SET1"), gates::not_), n1), 1e-12);
    EXPECT_LT(max_abs_diff(monadic_operator(canonical_basis("SET2"), gates::not_), n2), 1e-12);
    EXPECT_LT(max_abs_diff(logical_identity(canonical_basis("SET1")), id), 1e-12);
    EXPECT_LT(max_abs_diff(logical_identity(canonical_basis("SET2")), id), 1e-12);
}

TEST(MonadicOperator, Dim4IdentityAndNegation) {
    const auto b = canonical_basis("DIM4");
    EXPECT_LT(max_abs_diff(logical_negation(b), fixtures::reference::dim4_n()), 1e-12);
    EXPECT_LT(max_abs_diff(logical_identity(b), fixtures::reference::dim4_i()), 1e-12);
}

TEST(MonadicOperator, OrthonormalClosedForms) {
    const auto b = random_basis(6, 0.0, 3);
    const auto s = vec(b.s()), n = vec(b.n());
    EXPECT_LT(max_abs_diff(monadic_operator(b, gates::id), outer(s, s) + outer(n, n)), 1e-12);
    EXPECT_LT(max_abs_diff(monadic_operator(b, gates::not_), outer(n, s) + outer(s, n)), 1e-12);
    EXPECT_LT(max_abs_diff(monadic_operator(b, gates::cid), outer(s, s) + outer(s, n)), 1e-12);
    EXPECT_LT(max_abs_diff(monadic_operator(b, gates::cnot), outer(n, s) + outer(n, n)), 1e-12);
}

TEST(DyadicOperator, Set1ImplicationAndDisjunction) {
    const auto b = canonical_basis("SET1");
    const complex_matrix l{{1, 0, 1, 1}, {0, 1, 0, 0}};
    const complex_matrix d{{1, 1, 1, 0}, {0, 0, 0, 1}};
    EXPECT_LT(max_abs_diff(dyadic_operator(b, gates::impl), l), 1e-12);
    EXPECT_LT(max_abs_diff(dyadic_operator(b, gates::or_), d), 1e-12);
}

TEST(DyadicOperator, Set2ImplicationAndDisjunction) {
    const auto b = canonical_basis("SET2");
    const double r = 1 / std::sqrt(2.0);
    const auto l = scaled(r, {{2, 0, 0, 0}, {1, 1, -1, 1}});
    const auto d = scaled(r, {{2, 0, 0, 0}, {1, 1, 1, -1}});
    EXPECT_LT(max_abs_diff(dyadic_operator(b, gates::impl), l), 1e-12);
    EXPECT_LT(max_abs_diff(dyadic_operator(b, gates::or_), d), 1e-12);
}

TEST(DyadicOperator, Dim4EquivalenceOnFalseFalse) {
    const auto b = canonical_basis("DIM4");
    const auto e = dyadic_operator(b, gates::equi);
    EXPECT_LT(max_abs_diff(apply_dyadic(e, vec(b.n()), vec(b.n())), vec(b.s())), 1e-12);
}

TEST(Apply, Examples) {
    const auto s1 = canonical_basis("SET1");
    const auto l = dyadic_operator(s1, gates::impl);
    EXPECT_LT(max_abs_diff(apply_dyadic(l, vec(s1.n()), vec(s1.n())), cvector{1, 0}), 1e-15);

    const auto b = random_basis(5, 0.4, 9);
    EXPECT_LT(max_abs_diff(apply_monadic(logical_identity(b), vec(b.s())), vec(b.s())), 1e-12);

    const auto d4 = canonical_basis("DIM4");
    cvector x(4), expected(4);
    for (std::size_t i = 0; i < 4; ++i) {
        x[i] = 0.3 * d4.s()[i] + 0.7 * d4.n()[i];
        expected[i] = 0.3 * d4.n()[i] + 0.7 * d4.s()[i];
    }
    EXPECT_LT(max_abs_diff(apply_monadic(logical_negation(d4), x), expected), 1e-12);
    EXPECT_THROW(apply_dyadic(l, cvector(2), cvector(3)), dimension_mismatch);
}

TEST(Operators, NonOrthogonalIdentityAndNegation) {
    gen g(21);
    for (int trial = 0; trial < 30; ++trial) {
        const auto b = random_basis(g.integer(2, 20), g.uniform(-0.5, 0.9), g.seed());
        const auto i_bar = logical_identity(b);
        const auto n_bar = logical_negation(b);
        const auto s = vec(b.s()), n = vec(b.n());
        EXPECT_LT(max_abs_diff(matvec(i_bar, s), s), 1e-10);
        EXPECT_LT(max_abs_diff(matvec(i_bar, n), n), 1e-10);
        EXPECT_LT(max_abs_diff(matvec(n_bar, s), n), 1e-10);
        EXPECT_LT(max_abs_diff(matvec(n_bar, n), s), 1e-10);
    }
}

TEST(Operators, TruthTableFidelityAndTautologies) {
    gen g(22);
    std::vector<truth_basis> bases{canonical_basis("SET1"), canonical_basis("SET2"), canonical_basis("DIM4")};
    for (int trial = 0; trial < 20; ++trial)
        bases.push_back(random_basis(g.integer(2, 16), g.uniform(-0.5, 0.9), g.seed()));
    for (const auto& b : bases) {
        EXPECT_TRUE(suites::truth_table_fidelity(b).all_pass()) << "Q=" << b.dim();
        EXPECT_TRUE(suites::tautologies(b).all_pass()) << "Q=" << b.dim();
    }
}

TEST(FindGate, NamesAndArity) {
    EXPECT_EQ(find_gate("impl").arity, 2);
    EXPECT_EQ(find_gate("impl").name, "IMPL");
    EXPECT_EQ(find_gate("Cnot").arity, 1);
    EXPECT_THROW(find_gate("NIMPL"), unknown_name);
    const auto b = canonical_basis("SET1");
    EXPECT_EQ(gate_operator(b, find_gate("NOT")), logical_negation(b));
    EXPECT_EQ(gate_operator(b, find_gate("NAND")).cols(), 4u);
}

} // namespace
