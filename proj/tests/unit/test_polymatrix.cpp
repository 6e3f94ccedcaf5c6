#include "generators.hpp"
#include "matsos/errors.hpp"
#include "matsos/multipoly/parser.hpp"
#include "matsos/polymatrix/matrix_io.hpp"
#include "matsos/polymatrix/minpoly.hpp"
#include "matsos/polymatrix/psd_check.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

namespace matsos {
namespace {

const std::string kData = MATSOS_TEST_DATA_DIR;

MatrixInput load(const std::string& name) { return read_matrix_file(kData + "/" + name); }

Polynomial P(const std::string& s, const VarSet& vars) { return parse_poly(s, vars); }

using testing::eval_by_powers;

TEST(MatrixFile, ParsesFixtures) {
    auto ex1 = load("example1.matrix");
    EXPECT_EQ(ex1.vars.names(), (std::vector<std::string>{"x1", "x2"}));
    ASSERT_EQ(ex1.matrix.dim(), 2u);
    EXPECT_TRUE(ex1.matrix.is_symmetric());
    EXPECT_EQ(ex1.matrix(1, 0), RationalFunction(P("x1*x2", ex1.vars)));

    auto c = load("constant.matrix");
    EXPECT_EQ(c.vars.size(), 0u);
    EXPECT_EQ(c.matrix(1, 1), RationalFunction::constant(BigRat(3), 0));
}

TEST(MatrixFile, RejectsMalformedInput) {
    EXPECT_THROW(load("malformed.matrix"), ParseError);
    try {
        parse_matrix_file("vars: x1\ndim: 2\nentry 1 2: x1\nentry 2 1: x1\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
    }
    try {
        parse_matrix_file("vars: x1\ndim: 1\n\nentry 1 1: x1 + y\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 4u);
        EXPECT_EQ(e.position(), 16u);
    }
    EXPECT_THROW(parse_matrix_file("dim: 1\nentry 1 1: 1\n"), ParseError);
    EXPECT_THROW(parse_matrix_file("vars: x1\nentry 1 1: 1\n"), ParseError);
    EXPECT_THROW(parse_matrix_file("vars: x1\ndim: 1\nentry 2 1: 1\n"), ParseError);
    EXPECT_THROW(parse_matrix_file("vars: x1 x1\ndim: 1\n"), ParseError);
    EXPECT_THROW(parse_matrix_file("vars: x1\ndim: 0\n"), ParseError);
    EXPECT_THROW(parse_matrix_file("vars: x1\ndim: 1\nentry 1 1: x1/2\n"), ParseError);
    EXPECT_THROW(read_matrix_file(kData + "/does-not-exist.matrix"), Error);
}

TEST(MatrixFile, FormatRoundTrip) {
    for (const char* name : {"example1.matrix", "example2.matrix", "identity3.matrix", "constant.matrix"}) {
        auto in = load(name);
        auto again = parse_matrix_file(format_matrix_file(in.vars, in.matrix));
        EXPECT_EQ(again.vars, in.vars);
        EXPECT_EQ(again.matrix, in.matrix) << name;
    }
}

TEST(Matrix, Arithmetic) {
    auto ex1 = load("example1.matrix");
    const auto& a = ex1.matrix;
    auto id = SymbolicMatrix::identity(2, 2);
    EXPECT_EQ(mat_pow(a, 0), id);
    EXPECT_EQ(mat_mul(a, id), a);
    EXPECT_EQ(mat_pow(a, 2)(0, 0), RationalFunction(P("1 + x1^2*x2^2", ex1.vars)));
    EXPECT_EQ(mat_add(a, mat_scalar_mul(RationalFunction::constant(BigRat(-1), 2), a)), SymbolicMatrix(2, 2));
    EXPECT_EQ(mat_pow(a, 3), mat_mul(a, mat_mul(a, a)));
    EXPECT_THROW(mat_mul(a, SymbolicMatrix::identity(3, 2)), DomainError);
    EXPECT_THROW(mat_add(a, SymbolicMatrix::identity(2, 3)), DomainError);
}

TEST(Minors, ExampleOne) {
    auto ex1 = load("example1.matrix");
    auto minors = principal_minors(ex1.matrix);
    ASSERT_EQ(minors.size(), 3u);
    EXPECT_EQ(minors[0].rows, (std::vector<std::size_t>{0}));
    EXPECT_EQ(minors[0].value, P("1", ex1.vars));
    EXPECT_EQ(minors[1].value, P("1 + x1^4*x2^2 + x1^2*x2^4", ex1.vars));
    EXPECT_EQ(minors[2].rows, (std::vector<std::size_t>{0, 1}));
    Polynomial det = P("1 + x1^4*x2^2 + x1^2*x2^4 - x1^2*x2^2", ex1.vars);
    EXPECT_EQ(minors[2].value, det);
    EXPECT_EQ(det_bareiss(ex1.matrix), det);
    EXPECT_EQ(testing::cofactor_det(ex1.matrix.polynomial_entries()), det);
}

TEST(Minors, TrivialMatrices) {
    for (const auto& m : principal_minors(SymbolicMatrix::identity(3, 1))) EXPECT_TRUE(m.value.is_one());
    auto zero_minors = principal_minors(SymbolicMatrix(3, 1));
    EXPECT_EQ(zero_minors.size(), 7u);
    for (const auto& m : zero_minors) EXPECT_TRUE(m.value.is_zero());

    std::set<std::vector<std::size_t>> distinct;
    for (const auto& rows : principal_index_sets(4)) distinct.insert(rows);
    EXPECT_EQ(distinct.size(), 15u);

    SymbolicMatrix nonpoly(1, 1);
    nonpoly(0, 0) = RationalFunction(Polynomial::constant(BigRat(1), 1), Polynomial::variable(0, 1));
    EXPECT_THROW(principal_minors(nonpoly), DomainError);
}

TEST(Determinant, EqualRowsAndPivoting) {
    VarSet vars = VarSet::numbered(2);
    PolyMatrix equal_rows{{P("x1", vars), P("x2", vars)}, {P("x1", vars), P("x2", vars)}};
    EXPECT_TRUE(det_bareiss(equal_rows).is_zero());
    // Zero leading pivot forces a row swap.
    PolyMatrix swap{{P("0", vars), P("1", vars), P("0", vars)},
                    {P("1", vars), P("0", vars), P("0", vars)},
                    {P("0", vars), P("0", vars), P("x1", vars)}};
    EXPECT_EQ(det_bareiss(swap), P("-x1", vars));
    EXPECT_TRUE(det_bareiss(SymbolicMatrix::identity(4, 2)).is_one());
}

TEST(Determinant, BareissMatchesCofactorExpansion) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 80; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
        auto a = testing::random_symmetric_matrix(rng, n, 2, 2, 3);
        auto entries = a.polynomial_entries();
        ASSERT_EQ(det_bareiss(entries), testing::cofactor_det(entries)) << "trial " << trial;
    }
}

TEST(Charpoly, Examples) {
    auto ex1 = load("example1.matrix");
    const auto& a = ex1.matrix;
    UnivarPoly expected({RationalFunction(det_bareiss(a)), -a.trace(), RationalFunction::constant(BigRat(1), 2)}, 2);
    EXPECT_EQ(charpoly(a), expected);

    EXPECT_EQ(charpoly(SymbolicMatrix(3, 1)), UnivarPoly::monomial(RationalFunction::constant(BigRat(1), 1), 3));

    SymbolicMatrix cc(2, 1);
    RationalFunction c(P("x1 + 2", VarSet::numbered(1)));
    cc(0, 0) = c;
    cc(1, 1) = c;
    UnivarPoly lin({-c, RationalFunction::constant(BigRat(1), 1)}, 1);
    EXPECT_EQ(charpoly(cc), lin * lin);
}

TEST(Charpoly, CayleyHamiltonOnRandomMatrices) {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        auto a = testing::random_symmetric_matrix(rng, n, 2, 2, 3);
        auto p = charpoly(a);
        ASSERT_EQ(p.degree(), static_cast<int>(n));
        ASSERT_TRUE(eval_by_powers(p, a).is_zero()) << "trial " << trial;
        ASSERT_TRUE(eval_at_matrix(p, a).is_zero());
    }
}

TEST(MinimalPolynomial, ExampleTwo) {
    auto ex2 = load("example2.matrix");
    auto mp = minimal_polynomial(ex2.matrix);
    ASSERT_EQ(mp.d, 3);
    const auto& v = ex2.vars;
    EXPECT_EQ(mp.a[3], P("1", v));
    EXPECT_EQ(mp.a[2], P("3*x3^2+3*x2^2+3*x1^2", v));
    EXPECT_EQ(mp.a[1], P("2*x2^4+6*x1^2*x3^2+6*x1^2*x2^2+2*x1^4+2*x3^4+6*x2^2*x3^2", v));
    EXPECT_EQ(mp.a[0], P("4*x1^4*x2^2+4*x3^2*x2^4+4*x3^4*x1^2+4*x3^2*x1^2*x2^2", v));
    EXPECT_NO_THROW(check_lemma_form(mp));
}

TEST(MinimalPolynomial, ExampleOneIsTheCharacteristicPolynomial) {
    auto ex1 = load("example1.matrix");
    auto mp = minimal_polynomial(ex1.matrix);
    ASSERT_EQ(mp.d, 2);
    EXPECT_EQ(RationalFunction(mp.a[1]), ex1.matrix.trace());
    EXPECT_EQ(mp.a[0], det_bareiss(ex1.matrix));
    EXPECT_EQ(mp.to_univar(), charpoly(ex1.matrix));
    EXPECT_NO_THROW(check_lemma_form(mp));
}

TEST(MinimalPolynomial, TrivialMatrices) {
    auto id = minimal_polynomial(SymbolicMatrix::identity(3, 1));
    EXPECT_EQ(id.d, 1);
    EXPECT_TRUE(id.a[0].is_one());
    auto zero = minimal_polynomial(SymbolicMatrix(3, 1));
    EXPECT_EQ(zero.d, 1);
    EXPECT_TRUE(zero.a[0].is_zero());
    EXPECT_TRUE(zero.a[1].is_one());

    SymbolicMatrix asym = SymbolicMatrix::identity(2, 1);
    asym(0, 1) = RationalFunction::constant(BigRat(1), 1);
    EXPECT_THROW(minimal_polynomial(asym), DomainError);
}

TEST(MinimalPolynomial, KrylovDetectsNonDiagonalizable) {
    SymbolicMatrix jordan = SymbolicMatrix::identity(2, 0);
    jordan(0, 1) = RationalFunction::constant(BigRat(1), 0);
    auto k = krylov_minimal_polynomial(jordan).monic();
    // (t - 1)^2
    EXPECT_EQ(k, UnivarPoly({RationalFunction::constant(BigRat(1), 0), RationalFunction::constant(BigRat(-2), 0),
                             RationalFunction::constant(BigRat(1), 0)},
                            0));
}

TEST(MinimalPolynomial, RoutesAgreeOnDiagonalizableMatrices) {
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<long> eig(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        std::vector<BigRat> eigenvalues;
        for (std::size_t i = 0; i < n; ++i) eigenvalues.emplace_back(eig(rng));
        if (trial % 2 == 0) eigenvalues.back() = eigenvalues.front();
        auto a = testing::reflected_diagonal(rng, eigenvalues);
        ASSERT_TRUE(a.is_symmetric());

        // Oracle: product of (t - lambda) over distinct eigenvalues.
        UnivarPoly expected = testing::distinct_root_product(eigenvalues);
        auto mp = minimal_polynomial(a);
        ASSERT_EQ(mp.to_univar(), expected) << "trial " << trial;
        ASSERT_EQ(krylov_minimal_polynomial(a).monic(), expected);
    }
}

TEST(MinimalPolynomial, DividesCharpolyAndAnnihilates) {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 3);
        auto a = testing::random_symmetric_matrix(rng, n, 2, 2, 2);
        auto p = minimal_polynomial(a).to_univar();
        ASSERT_TRUE(mod(charpoly(a), p).is_zero());
        ASSERT_TRUE(eval_by_powers(p, a).is_zero());
    }
}

TEST(LemmaForm, Violations) {
    VarSet v = VarSet::numbered(1);
    MinPolyForm t_squared{2, {P("0", v), P("0", v), P("1", v)}};
    try {
        check_lemma_form(t_squared);
        FAIL();
    } catch (const LemmaViolation& e) {
        EXPECT_EQ(e.coefficient(), -1);
    }
    MinPolyForm no_a1{2, {P("1", v), P("0", v), P("1", v)}};
    EXPECT_THROW(check_lemma_form(no_a1), LemmaViolation);

    MinPolyForm odd{2, {P("x1", v), P("1", v), P("1", v)}};
    try {
        check_lemma_form(odd);
        FAIL();
    } catch (const LemmaViolation& e) {
        EXPECT_EQ(e.coefficient(), 0);
        ASSERT_EQ(e.witness().size(), 1u);
        EXPECT_LT(BigRat::parse(e.witness()[0]), BigRat(0));
    }
}

TEST(PsdCheck, Examples) {
    auto ex1 = load("example1.matrix");
    auto report = psd_sample_check(ex1.matrix, 100, 0);
    EXPECT_TRUE(report.pass());
    EXPECT_EQ(report.samples, 100);

    SymbolicMatrix neg(1, 1);
    neg(0, 0) = RationalFunction::constant(BigRat(-1), 1);
    auto r_neg = psd_sample_check(neg, 100, 0);
    ASSERT_FALSE(r_neg.pass());
    EXPECT_EQ(r_neg.samples, 1);
    EXPECT_EQ(r_neg.witness->value, BigRat(-1));

    auto x1 = load("x1.matrix");
    auto r_x1 = psd_sample_check(x1.matrix, 100, 0);
    ASSERT_FALSE(r_x1.pass());
    EXPECT_LT(r_x1.witness->point[0], BigRat(0));
    EXPECT_EQ(r_x1.witness->minor, (std::vector<std::size_t>{0}));
}

TEST(PsdCheck, DeterministicGivenSeed) {
    SymbolicMatrix m(2, 2);
    VarSet v = VarSet::numbered(2);
    m(0, 0) = RationalFunction(P("1", v));
    m(0, 1) = m(1, 0) = RationalFunction(P("x1", v));
    m(1, 1) = RationalFunction(P("x2^2", v));
    auto a = psd_sample_check(m, 100, 9);
    auto b = psd_sample_check(m, 100, 9);
    ASSERT_FALSE(a.pass());
    EXPECT_EQ(a.samples, b.samples);
    EXPECT_EQ(a.witness->point, b.witness->point);
}

TEST(PsdCheck, GoldenMatricesSatisfyLemmaForm) {
    for (const char* name : {"example1.matrix", "example2.matrix", "identity3.matrix", "constant.matrix"}) {
        auto in = load(name);
        ASSERT_TRUE(psd_sample_check(in.matrix, 100, 0).pass()) << name;
        EXPECT_NO_THROW(check_lemma_form(minimal_polynomial(in.matrix))) << name;
    }
}

}  // namespace
}  // namespace matsos
