#include "matsos/exactarith/four_squares.hpp"

#include "matsos/errors.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace matsos {

namespace {

using Quad = std::array<BigInt, 4>;

// Euler's four-square identity. When b_i == a_i (mod m) and m divides both
// norms, every output component is divisible by m.
Quad euler_product(const Quad& a, const Quad& b) {
    return {a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3],
            a[0] * b[1] - a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
            a[0] * b[2] - a[1] * b[3] - a[2] * b[0] + a[3] * b[1],
            a[0] * b[3] + a[1] * b[2] - a[2] * b[1] - a[3] * b[0]};
}

BigInt norm(const Quad& q) { return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]; }

BigInt mod_pos(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

BigInt powm(const BigInt& base, const BigInt& exp, const BigInt& mod) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// Residue of a in (-m/2, m/2].
BigInt centered(const BigInt& a, const BigInt& m) {
    BigInt r = mod_pos(a, m);
    if (2 * r > m) r -= m;
    return r;
}

// x, y with x^2 + y^2 + 1 == 0 (mod p), both in [0, (p-1)/2].
std::pair<BigInt, BigInt> minus_one_as_two_squares(const BigInt& p) {
    BigInt half = (p - 1) / 2;
    auto fold = [&](BigInt v) { return v > half ? BigInt(p - v) : v; };
    if (mod_pos(p, 4) == 1) {
        // x^2 == -1 with x = c^((p-1)/4) for a non-residue c.
        for (BigInt c = 2;; ++c) {
            if (mpz_legendre(c.get_mpz_t(), p.get_mpz_t()) == -1) {
                return {fold(powm(c, (p - 1) / 4, p)), BigInt(0)};
            }
        }
    }
    // p == 3 (mod 4): square roots are a^((p+1)/4).
    for (BigInt x = 0; x <= half; ++x) {
        BigInt target = mod_pos(-1 - x * x, p);
        if (target == 0) return {x, BigInt(0)};
        if (mpz_legendre(target.get_mpz_t(), p.get_mpz_t()) == 1) {
            return {x, fold(powm(target, (p + 1) / 4, p))};
        }
    }
    throw DomainError("no solution of x^2 + y^2 + 1 = 0 mod " + p.get_str());
}

Quad prime_four_squares(const BigInt& p) {
    if (p == 2) return {1, 1, 0, 0};
    auto [x0, y0] = minus_one_as_two_squares(p);
    Quad x{x0, y0, 1, 0};
    BigInt m = norm(x) / p;
    while (m > 1) {
        if (m % 2 == 0) {
            // Pair entries of equal parity and halve.
            std::sort(x.begin(), x.end(), [](const BigInt& a, const BigInt& b) {
                return mpz_odd_p(a.get_mpz_t()) < mpz_odd_p(b.get_mpz_t());
            });
            x = {(x[0] + x[1]) / 2, (x[0] - x[1]) / 2, (x[2] + x[3]) / 2, (x[2] - x[3]) / 2};
            m /= 2;
            continue;
        }
        Quad y{centered(x[0], m), centered(x[1], m), centered(x[2], m), centered(x[3], m)};
        BigInt r = norm(y) / m;
        Quad z = euler_product(x, y);
        for (auto& c : z) c /= m;
        x = z;
        m = r;
    }
    return x;
}

// Trial factorization into (prime, exponent) pairs.
std::vector<std::pair<BigInt, unsigned long>> factorize(BigInt n) {
    std::vector<std::pair<BigInt, unsigned long>> out;
    auto take = [&](const BigInt& p) {
        unsigned long e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    take(BigInt(2));
    for (BigInt p = 3; p * p <= n; p += 2) take(p);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

FourSquares normalized(Quad q) {
    for (auto& c : q) c = ::abs(c);
    std::sort(q.begin(), q.end(), [](const BigInt& a, const BigInt& b) { return a > b; });
    FourSquares out;
    for (int i = 0; i < 4; ++i) out.parts[i] = BigRat(q[i]);
    return out;
}

}  // namespace

BigRat FourSquares::sum_of_squares() const {
    BigRat s;
    for (const auto& p : parts) s += p * p;
    return s;
}

int FourSquares::nonzero_count() const {
    return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](const BigRat& p) { return !p.is_zero(); }));
}

FourSquares four_squares_integer(const BigInt& n) {
    if (n < 0) throw DomainError("four-squares decomposition of negative integer " + n.get_str());
    if (n == 0) return normalized({0, 0, 0, 0});

    BigInt square_root_part = 1;
    Quad acc{1, 0, 0, 0};
    for (const auto& [p, e] : factorize(n)) {
        for (unsigned long k = 0; k < e / 2; ++k) square_root_part *= p;
        if (e % 2 == 1) acc = euler_product(acc, prime_four_squares(p));
    }
    for (auto& c : acc) c *= square_root_part;
    return normalized(acc);
}

FourSquares four_squares_rational(const BigRat& q) {
    if (q.sign() < 0) throw DomainError("four-squares decomposition of negative rational " + q.to_string());
    BigInt den = q.den();
    FourSquares out = four_squares_integer(q.num() * den);
    for (auto& part : out.parts) part /= BigRat(den);
    return out;
}

}  // namespace matsos
