#include "matsos/matrixcert/construction.hpp"

#include "matsos/errors.hpp"

namespace matsos {

namespace {

void check_form(const MinPolyForm& mp) {
    if (mp.d < 1 || mp.a.size() != static_cast<std::size_t>(mp.d) + 1) {
        throw DomainError("minimal polynomial form has the wrong number of coefficients");
    }
    if (!mp.a.back().is_one()) throw DomainError("minimal polynomial form is not monic");
}

}  // namespace

EvenOddSplit split_even_odd(const MinPolyForm& mp) {
    check_form(mp);
    if (mp.a[1].is_zero()) throw LemmaViolation("a1 = 0, so b(A) is singular", 1);
    const std::size_t nvars = mp.a[0].nvars();
    const auto d = static_cast<std::size_t>(mp.d);
    std::vector<RationalFunction> b(d, RationalFunction(nvars)), r(d + 1, RationalFunction(nvars));
    for (std::size_t i = 0; i <= d; ++i) {
        if (i % 2 == 1) {
            b[i - 1] = RationalFunction(mp.a[i]);
        } else {
            r[i] = RationalFunction(mp.a[i]);
        }
    }
    EvenOddSplit split{UnivarPoly(std::move(b), nvars), UnivarPoly(std::move(r), nvars)};

    const UnivarPoly t = UnivarPoly::monomial(RationalFunction::constant(BigRat(1), nvars), 1);
    if (!mod(t * split.b - split.r, mp.to_univar()).is_zero()) {
        throw VerificationFailed("t*b(t) - r(t) is not a multiple of the minimal polynomial");
    }
    return split;
}

UnivarPoly invert_b_mod_p(const EvenOddSplit& split, const MinPolyForm& mp) {
    check_form(mp);
    const std::size_t nvars = mp.a[0].nvars();
    const UnivarPoly p = mp.to_univar();
    if (split.b.is_zero()) throw NotCoprime("b is zero");

    UnivarPoly q(nvars);
    if (split.b.degree() == 0) {
        q = UnivarPoly({split.b.coeff(0).inverse()}, nvars);
    } else {
        ExtEuclidResult ee = ext_euclid(split.b, p);
        if (ee.gcd.degree() != 0) throw NotCoprime("gcd(b, p) has positive degree");
        q = ee.b_cofactor.degree() >= mp.d ? mod(ee.b_cofactor, p) : ee.b_cofactor;
        q = q.reduced();
    }
    const UnivarPoly one({RationalFunction::constant(BigRat(1), nvars)}, nvars);
    if (!(mod(q * split.b, p) == one)) throw VerificationFailed("q*b is not 1 modulo the minimal polynomial");
    return q;
}

}  // namespace matsos
