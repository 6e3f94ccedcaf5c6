#include "generators.hpp"
#include "matsos/errors.hpp"
#include "matsos/matrixcert/certify.hpp"
#include "matsos/matrixcert/serialize.hpp"
#include "matsos/multipoly/parser.hpp"
#include "matsos/polymatrix/matrix_io.hpp"

#include <gtest/gtest.h>

namespace matsos {
namespace {

const std::string kData = MATSOS_TEST_DATA_DIR;

MatrixInput load(const std::string& name) { return read_matrix_file(kData + "/" + name); }

UnivarPoly U(const std::string& s, const VarSet& vars) {
    // Coefficients listed from t^0 upward, separated by ';'.
    std::vector<Polynomial> c;
    std::size_t start = 0;
    for (;;) {
        auto end = s.find(';', start);
        c.push_back(parse_poly(s.substr(start, end - start), vars));
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return UnivarPoly::from_polynomials(c, vars.size());
}

SymbolicMatrix constant_matrix(const std::vector<std::vector<long>>& rows) {
    SymbolicMatrix m(rows.size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = RationalFunction::constant(BigRat(rows[i][j]), 0);
    }
    return m;
}

// The invariants every certificate and its intermediate objects must meet.
void expect_construction_invariants(const SymbolicMatrix& a, const MatrixSOSCert& cert) {
    const MinPolyForm& mp = cert.minpoly;
    const std::size_t n = a.dim();
    EvenOddSplit split = split_even_odd(mp);
    UnivarPoly q = invert_b_mod_p(split, mp);
    const SymbolicMatrix b_of_a = eval_at_matrix(split.b, a);
    EXPECT_EQ(b_of_a * a, eval_at_matrix(split.r, a));
    EXPECT_EQ(eval_at_matrix(q, a) * b_of_a, SymbolicMatrix::identity(n, a.nvars()));
    EXPECT_LT(q.degree(), mp.d);
    for (std::size_t k = 1; k < split.b.coeffs().size(); k += 2) EXPECT_TRUE(split.b.coeff(k).is_zero());
    for (std::size_t k = 1; k < split.r.coeffs().size(); k += 2) EXPECT_TRUE(split.r.coeff(k).is_zero());
    EXPECT_EQ(cert.square_count, cert.squares.size());
    EXPECT_EQ(cert.square_count, expected_square_count(mp, cert.scalar_certs));

    SymbolicMatrix sum(n, a.nvars());
    for (const auto& m : cert.squares) {
        EXPECT_TRUE(m.is_symmetric());
        EXPECT_EQ(m * a, a * m);
        sum += m * m;
    }
    EXPECT_EQ(sum, a);
    for (std::size_t j = 0; j < cert.squares.size() && j < 6; ++j) {
        for (std::size_t k = j + 1; k < cert.squares.size() && k < 6; ++k) {
            EXPECT_EQ(cert.squares[j] * cert.squares[k], cert.squares[k] * cert.squares[j]);
        }
    }
    auto report = verify_matrix_cert(a, cert);
    EXPECT_TRUE(report.ok());
    EXPECT_TRUE(report.commutation_checked);

    const std::string text = serialize_certificate(cert);
    MatrixSOSCert back = parse_certificate(text);
    EXPECT_EQ(serialize_certificate(back), text);
    EXPECT_TRUE(verify_matrix_cert(a, back).ok());
}

TEST(SplitEvenOdd, ExampleTwo) {
    auto ex2 = load("example2.matrix");
    auto mp = minimal_polynomial(ex2.matrix);
    auto split = split_even_odd(mp);
    const VarSet& v = ex2.vars;
    const std::string a0 = print_poly(mp.a[0], v), a1 = print_poly(mp.a[1], v), a2 = print_poly(mp.a[2], v);
    EXPECT_EQ(split.b, U(a1 + ";0;1", v));
    EXPECT_EQ(split.r, U(a0 + ";0;" + a2, v));
}

TEST(SplitEvenOdd, ExampleOneAndScalar) {
    auto ex1 = load("example1.matrix");
    auto mp = minimal_polynomial(ex1.matrix);
    auto split = split_even_odd(mp);
    EXPECT_EQ(split.b, UnivarPoly({ex1.matrix.trace()}, 2));
    EXPECT_EQ(split.r, UnivarPoly::from_polynomials({det_bareiss(ex1.matrix), Polynomial(2), Polynomial::constant(1, 2)}, 2));

    auto c = minimal_polynomial(constant_matrix({{5, 0}, {0, 5}}));
    ASSERT_EQ(c.d, 1);
    auto cs = split_even_odd(c);
    EXPECT_EQ(cs.b, UnivarPoly({RationalFunction::constant(1, 0)}, 0));
    EXPECT_EQ(cs.r, UnivarPoly({RationalFunction::constant(5, 0)}, 0));
}

TEST(SplitEvenOdd, RejectsVanishingLinearCoefficient) {
    MinPolyForm mp{2, {Polynomial::variable(0, 1), Polynomial(1), Polynomial::constant(1, 1)}};
    try {
        split_even_odd(mp);
        FAIL();
    } catch (const LemmaViolation& e) {
        EXPECT_EQ(e.coefficient(), 1);
    }
    MinPolyForm not_monic{1, {Polynomial(1), Polynomial::constant(2, 1)}};
    EXPECT_THROW(split_even_odd(not_monic), DomainError);
}

TEST(InvertB, Examples) {
    auto ex1 = load("example1.matrix");
    auto mp1 = minimal_polynomial(ex1.matrix);
    auto q1 = invert_b_mod_p(split_even_odd(mp1), mp1);
    EXPECT_EQ(q1, UnivarPoly({ex1.matrix.trace().inverse()}, 2));

    MinPolyForm unit{1, {Polynomial::constant(3, 0), Polynomial::constant(1, 0)}};
    EXPECT_EQ(invert_b_mod_p(split_even_odd(unit), unit), UnivarPoly({RationalFunction::constant(1, 0)}, 0));

    auto ex2 = load("example2.matrix");
    auto mp2 = minimal_polynomial(ex2.matrix);
    auto split2 = split_even_odd(mp2);
    auto q2 = invert_b_mod_p(split2, mp2);
    EXPECT_LE(q2.degree(), 2);
    EXPECT_EQ(mod(q2 * split2.b, mp2.to_univar()), UnivarPoly({RationalFunction::constant(1, 3)}, 3));
}

TEST(InvertB, DetectsCommonFactor) {
    // p = (t^2 + 1)(t - 1) = t^3 - t^2 + t - 1, so b = t^2 + 1 divides p.
    const Polynomial one = Polynomial::constant(1, 0);
    MinPolyForm mp{3, {one, one, one, one}};
    EXPECT_THROW(invert_b_mod_p(split_even_odd(mp), mp), NotCoprime);
}

TEST(BuildSquares, ScalarMatrix) {
    auto a = constant_matrix({{4, 0}, {0, 4}});
    auto mp = minimal_polynomial(a);
    auto split = split_even_odd(mp);
    auto q = invert_b_mod_p(split, mp);
    std::map<int, ScalarSOSCert> certs{{0, sos_constant(BigRat(4), 0)}};
    auto cert = build_squares(a, mp, q, certs, VarSet{});
    ASSERT_EQ(cert.squares.size(), 1u);
    EXPECT_EQ(cert.squares[0], constant_matrix({{2, 0}, {0, 2}}));
    EXPECT_THROW(build_squares(a, mp, q, {}, VarSet{}), MissingScalarCert);
    std::map<int, ScalarSOSCert> wrong{{0, sos_constant(BigRat(9), 0)}};
    EXPECT_THROW(build_squares(a, mp, q, wrong, VarSet{}), VerificationFailed);
}

TEST(BuildSquares, ExampleOneShape) {
    auto ex1 = load("example1.matrix");
    auto store = read_certificate_store(kData + "/example1.store", ex1.vars);
    auto cert = certify(ex1.matrix, ex1.vars, store);
    // Pairs (1,0) and (1,2): c1 * c0 + c1 * 1.
    const std::size_t c1 = cert.scalar_certs.at(1).squares.size(), c0 = cert.scalar_certs.at(0).squares.size();
    EXPECT_EQ(c0, 24u);
    EXPECT_EQ(c1, 4u);
    EXPECT_EQ(cert.square_count, c1 * c0 + c1);
    // Squares s*u*tr(A)^-1*I come first (j = 0), then s*tr(A)^-1*A.
    const RationalFunction inv_tr = ex1.matrix.trace().inverse();
    const auto& s0 = cert.scalar_certs.at(1).squares[0];
    const auto& u0 = cert.scalar_certs.at(0).squares[0];
    EXPECT_EQ(cert.squares.front(), (s0 * u0 * inv_tr) * SymbolicMatrix::identity(2, 2));
    EXPECT_EQ(cert.squares.back(), (cert.scalar_certs.at(1).squares.back() * inv_tr) * ex1.matrix);
    expect_construction_invariants(ex1.matrix, cert);
}

TEST(VerifyMatrixCert, DetectsTampering) {
    auto a = constant_matrix({{2, 1}, {1, 3}});
    auto cert = certify(a, VarSet{}, {});
    ASSERT_TRUE(verify_matrix_cert(a, cert).ok());

    auto negated = cert;
    negated.squares[0] = RationalFunction::constant(-1, 0) * negated.squares[0];
    EXPECT_TRUE(verify_matrix_cert(a, negated).ok());

    auto perturbed = cert;
    perturbed.squares[0](0, 0) += RationalFunction::constant(1, 0);
    auto report = verify_matrix_cert(a, perturbed);
    EXPECT_FALSE(report.ok());
    EXPECT_TRUE(report.symmetric);
    EXPECT_FALSE(report.sum_matches);
    ASSERT_TRUE(report.discrepancy);
    EXPECT_EQ(report.discrepancy->check, "sum");
    EXPECT_TRUE(report.discrepancy->row == 0 || report.discrepancy->col == 0);

    auto asym = cert;
    asym.squares[0](0, 1) += RationalFunction::constant(1, 0);
    report = verify_matrix_cert(a, asym);
    EXPECT_FALSE(report.symmetric);
    EXPECT_EQ(report.discrepancy->square, std::optional<std::size_t>(0));

    auto miscounted = cert;
    miscounted.square_count += 1;
    EXPECT_FALSE(verify_matrix_cert(a, miscounted).count_ok);

    EXPECT_FALSE(verify_matrix_cert(constant_matrix({{1}}), cert).dimensions_ok);
}

TEST(VerifyMatrixCert, NonCommutingSquares) {
    // diag(1,-1)^2 + [[0,1],[1,0]]^2 = 2I, but the squares do not commute.
    auto a = constant_matrix({{2, 0}, {0, 2}});
    MatrixSOSCert cert;
    cert.dim = 2;
    cert.squares = {constant_matrix({{1, 0}, {0, -1}}), constant_matrix({{0, 1}, {1, 0}})};
    cert.square_count = 2;
    auto report = verify_matrix_cert(a, cert);
    EXPECT_TRUE(report.sum_matches);
    EXPECT_FALSE(report.commutes);
    EXPECT_TRUE(verify_matrix_cert(a, cert, false).ok());
}

TEST(Certify, ExampleTwo) {
    auto ex2 = load("example2.matrix");
    auto cert = certify(ex2.matrix, ex2.vars, {});
    for (int i = 0; i < 3; ++i) EXPECT_EQ(cert.scalar_certs.at(i).provider, provider::kMonomialSquares) << i;
    EXPECT_EQ(cert.square_count, 208u);
    EXPECT_EQ(cert.timings.size(), 9u);
    expect_construction_invariants(ex2.matrix, cert);
}

TEST(Certify, ExampleOneNeedsTheStore) {
    auto ex1 = load("example1.matrix");
    try {
        certify(ex1.matrix, ex1.vars, {});
        FAIL();
    } catch (const ScalarSOSUnavailable& e) {
        EXPECT_EQ(e.index(), 0);
        EXPECT_EQ(e.stage(), stage::kScalarSOS);
        EXPECT_NE(std::string(e.what()).find("a0 = "), std::string::npos);
    }
    auto store = read_certificate_store(kData + "/example1.store", ex1.vars);
    auto cert = certify(ex1.matrix, ex1.vars, store);
    EXPECT_EQ(cert.scalar_certs.at(0).provider, provider::kDenominatorLift);
    EXPECT_TRUE(verify_matrix_cert(ex1.matrix, cert).ok());
}

TEST(Certify, RefutesAndRejects) {
    auto x1 = load("x1.matrix");
    try {
        certify(x1.matrix, x1.vars, {});
        FAIL();
    } catch (const NotPSD& e) {
        EXPECT_EQ(e.stage(), stage::kPsdCheck);
        ASSERT_EQ(e.witness().size(), 1u);
        EXPECT_EQ(e.witness()[0].rfind("x1 = -", 0), 0u);
        EXPECT_EQ(e.minor(), std::vector<std::size_t>{0});
    }
    auto asym = constant_matrix({{1, 0}, {1, 1}});
    try {
        certify(asym, VarSet{}, {});
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_EQ(e.stage(), stage::kInput);
    }
    EXPECT_THROW(certify(constant_matrix({{1, 2}, {2, 1}}), VarSet{}, {}), NotPSD);
}

TEST(Certify, DegenerateMatrices) {
    auto zero = constant_matrix({{0, 0}, {0, 0}});
    auto cert = certify(zero, VarSet{}, {});
    EXPECT_TRUE(cert.squares.empty());
    EXPECT_TRUE(verify_matrix_cert(zero, cert).ok());

    auto singular = constant_matrix({{1, 1}, {1, 1}});
    expect_construction_invariants(singular, certify(singular, VarSet{}, {}));

    auto id3 = load("identity3.matrix");
    auto c = certify(id3.matrix, id3.vars, {});
    EXPECT_EQ(c.minpoly.d, 1);
    expect_construction_invariants(id3.matrix, c);
}

TEST(Certify, DeterministicOutput) {
    auto ex1 = load("example1.matrix");
    auto store = read_certificate_store(kData + "/example1.store", ex1.vars);
    EXPECT_EQ(serialize_certificate(certify(ex1.matrix, ex1.vars, store)),
              serialize_certificate(certify(ex1.matrix, ex1.vars, store)));
}

TEST(Properties, RationalGramMatrices) {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = testing::random_gram_constant(rng, dim(rng), 5);
        auto cert = certify(a, VarSet{}, {});
        for (const auto& [i, sc] : cert.scalar_certs) {
            EXPECT_TRUE(sc.provider == provider::kConstant || sc.provider == provider::kZero) << sc.provider;
        }
        expect_construction_invariants(a, cert);
    }
}

TEST(Properties, PolynomialEigenvalues) {
    std::mt19937_64 rng(5151);
    std::uniform_int_distribution<std::size_t> dim(2, 3), nv(1, 2);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = dim(rng), nvars = nv(rng);
        std::vector<Polynomial> eig;
        for (std::size_t i = 0; i < n; ++i) eig.push_back(testing::random_even_square_sum(rng, nvars, 1, 2));
        auto a = testing::reflected_poly_diagonal(rng, eig);
        auto cert = certify(a, VarSet::numbered(nvars), {});
        expect_construction_invariants(a, cert);
    }
}

TEST(Serialization, RejectsMalformedCertificates) {
    EXPECT_THROW(parse_certificate("{"), ParseError);
    EXPECT_THROW(parse_certificate("[]"), ParseError);
    EXPECT_THROW(parse_certificate(R"({"version": 1})"), ParseError);

    auto a = constant_matrix({{2, 1}, {1, 3}});
    const std::string good = serialize_certificate(certify(a, VarSet{}, {}));
    auto broken = good;
    broken.replace(broken.find("\"version\": 1"), 12, "\"version\": 7");
    EXPECT_THROW(parse_certificate(broken), ParseError);
    broken = good;
    broken.replace(broken.find("\"dim\": 2"), 8, "\"dim\": 3");
    EXPECT_THROW(parse_certificate(broken), ParseError);
    broken = good;
    auto pos = broken.find("\"den\": \"1\"");
    broken.replace(pos, 10, "\"den\": \"0\"");
    EXPECT_THROW(parse_certificate(broken), ParseError);
    broken = good;
    pos = broken.find("\"num\": \"");
    broken.insert(pos + 8, "y + ");
    EXPECT_THROW(parse_certificate(broken), ParseError);
}

}  // namespace
}  // namespace matsos
