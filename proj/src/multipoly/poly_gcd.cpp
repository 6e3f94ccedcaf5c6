// Multivariate gcd over Q by recursion on variables: contents are taken with
// respect to one variable, primitive parts go through a primitive
// pseudo-remainder sequence in that variable.

#include "matsos/errors.hpp"
#include "matsos/multipoly/polynomial.hpp"

#include <limits>

namespace matsos {

namespace {

using Coeffs = std::vector<Polynomial>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Pseudo-remainder of f by g as univariate polynomials (coefficient lists).
Coeffs pseudo_remainder(Coeffs f, const Coeffs& g) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    const Polynomial& lc_g = g.back();
    while (!f.empty() && f.size() - 1 >= dg) {
        const std::size_t shift = f.size() - 1 - dg;
        Polynomial lc_f = f.back();
        for (auto& c : f) c *= lc_g;
        for (std::size_t k = 0; k <= dg; ++k) f[k + shift] -= lc_f * g[k];
        trim(f);
    }
    return f;
}

Polynomial content(const Coeffs& c) {
    Polynomial g(c.front().nvars());
    for (const auto& coeff : c) {
        g = gcd(g, coeff);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

Coeffs primitive_part(Coeffs c) {
    Polynomial cont = content(c);
    if (!cont.is_one()) {
        for (auto& coeff : c) coeff = *divide_exact(coeff, cont);
    }
    BigRat k = numeric_content(c);
    if (!k.is_one()) {
        BigRat inv = k.inverse();
        for (auto& coeff : c) coeff *= inv;
    }
    return c;
}

}  // namespace

BigRat numeric_content(std::span<const Polynomial> ps) {
    BigInt g = 0, l = 1;
    for (const auto& p : ps) {
        for (const auto& t : p.terms()) {
            g = gcd(g, t.coeff.num());
            l = lcm(l, t.coeff.den());
        }
    }
    if (g == 0) return BigRat(1);
    return BigRat(g, l);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw DomainError("gcd of polynomials over different variable counts");
    const std::size_t n = a.nvars();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(BigRat(1), n);
    if (a.size() <= b.size()) {
        if (divide_exact(b, a)) return a.monic();
    } else if (divide_exact(a, b)) {
        return b.monic();
    }

    // A variable present in only one argument cannot occur in the gcd.
    for (std::size_t v = 0; v < n; ++v) {
        bool in_a = a.contains_var(v), in_b = b.contains_var(v);
        if (in_a && !in_b) return gcd(content(a.coefficients_in(v)), b);
        if (in_b && !in_a) return gcd(a, content(b.coefficients_in(v)));
    }

    std::size_t var = n;
    auto best = std::numeric_limits<Monomial::Exponent>::max();
    for (std::size_t v = 0; v < n; ++v) {
        if (!a.contains_var(v)) continue;
        auto d = std::max(a.degree_in(v), b.degree_in(v));
        if (d < best) {
            best = d;
            var = v;
        }
    }

    Coeffs ca = a.coefficients_in(var);
    Coeffs cb = b.coefficients_in(var);
    Polynomial cont = gcd(content(ca), content(cb));
    Coeffs f = primitive_part(std::move(ca));
    Coeffs g = primitive_part(std::move(cb));
    if (f.size() < g.size()) std::swap(f, g);

    Coeffs result;
    for (;;) {
        Coeffs r = pseudo_remainder(f, g);
        if (r.empty()) {
            result = std::move(g);
            break;
        }
        if (r.size() == 1) {
            result = {Polynomial::constant(BigRat(1), n)};
            break;
        }
        f = std::move(g);
        g = primitive_part(std::move(r));
    }
    result = primitive_part(std::move(result));
    return (cont * Polynomial::from_coefficients_in(result, var, n)).monic();
}

}  // namespace matsos
