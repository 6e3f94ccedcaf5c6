// Gram-matrix attempt: p = z^T G z over a monomial vector z. The basis comes
// from a degree box around half the support, pruned of monomials whose
// diagonal entry is forced to zero. A particular solution of the linear
// system (free unknowns at zero) is factored as L D L^T; nonnegative pivots
// give the squares.

#include "matsos/errors.hpp"
#include "matsos/scalarsos/scalar_cert.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <variant>

namespace matsos {

namespace {

using Exps = std::vector<Monomial::Exponent>;

void enumerate_box(std::size_t var, Exps& cur, const Exps& lo, const Exps& hi, std::uint64_t dmin, std::uint64_t dmax,
                   std::uint64_t deg, std::vector<Monomial>& out) {
    if (var == cur.size()) {
        if (deg >= dmin && deg <= dmax) out.emplace_back(cur);
        return;
    }
    for (auto e = lo[var]; e <= hi[var] && deg + e <= dmax; ++e) {
        cur[var] = e;
        enumerate_box(var + 1, cur, lo, hi, dmin, dmax, deg + e, out);
    }
    cur[var] = 0;
}

std::vector<Monomial> candidate_basis(const Polynomial& p) {
    const std::size_t n = p.nvars();
    Exps lo(n, std::numeric_limits<Monomial::Exponent>::max()), hi(n, 0);
    std::uint64_t dmin = std::numeric_limits<std::uint64_t>::max(), dmax = 0;
    for (const auto& t : p.terms()) {
        for (std::size_t v = 0; v < n; ++v) {
            lo[v] = std::min(lo[v], t.mono[v]);
            hi[v] = std::max(hi[v], t.mono[v]);
        }
        dmin = std::min(dmin, t.mono.degree());
        dmax = std::max(dmax, t.mono.degree());
    }
    if (dmin % 2 != 0 || dmax % 2 != 0) throw NotFound("extreme total degrees are not even");
    for (std::size_t v = 0; v < n; ++v) {
        if (lo[v] % 2 != 0 || hi[v] % 2 != 0) throw NotFound("extreme exponents are not even");
        lo[v] /= 2;
        hi[v] /= 2;
    }
    std::vector<Monomial> basis;
    Exps cur(n, 0);
    enumerate_box(0, cur, lo, hi, dmin / 2, dmax / 2, 0, basis);

    std::set<Monomial> support;
    for (const auto& t : p.terms()) support.insert(t.mono);
    for (bool changed = true; changed;) {
        changed = false;
        std::set<Monomial> in_basis(basis.begin(), basis.end());
        std::vector<Monomial> kept;
        for (const auto& a : basis) {
            Monomial sq = a * a;
            bool needed = support.count(sq) > 0;
            for (const auto& b : basis) {
                if (needed) break;
                if (b == a || !b.divides(sq)) continue;
                if (in_basis.count(b.quotient_of(sq)) > 0) needed = true;
            }
            if (needed) {
                kept.push_back(a);
            } else {
                changed = true;
            }
        }
        basis = std::move(kept);
    }
    std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) { return a > b; });
    return basis;
}

using Gram = std::vector<std::vector<BigRat>>;

// One particular solution of z^T G z = p: RREF of the coefficient system with
// the unknowns in the given column order, non-pivot unknowns set to zero.
Gram particular_solution(const Polynomial& p, const std::vector<Monomial>& basis,
                         const std::vector<std::pair<std::size_t, std::size_t>>& unknowns) {
    const std::size_t m = basis.size();
    std::map<Monomial, std::size_t, std::greater<>> row_of;
    for (const auto& [i, j] : unknowns) row_of.emplace(basis[i] * basis[j], 0);
    for (const auto& t : p.terms()) {
        if (row_of.count(t.mono) == 0) throw NotFound("term outside the span of the monomial basis");
    }
    std::size_t r = 0;
    for (auto& [mono, idx] : row_of) idx = r++;

    const std::size_t cols = unknowns.size();
    std::vector<std::vector<BigRat>> sys(row_of.size(), std::vector<BigRat>(cols + 1));
    for (std::size_t c = 0; c < cols; ++c) {
        const auto& [i, j] = unknowns[c];
        sys[row_of.at(basis[i] * basis[j])][c] = BigRat(i == j ? 1 : 2);
    }
    for (const auto& [mono, idx] : row_of) sys[idx][cols] = p.coeff(mono);

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < sys.size(); ++c) {
        std::size_t pr = rank;
        while (pr < sys.size() && sys[pr][c].is_zero()) ++pr;
        if (pr == sys.size()) continue;
        std::swap(sys[pr], sys[rank]);
        BigRat inv = sys[rank][c].inverse();
        for (auto& x : sys[rank]) x *= inv;
        for (std::size_t row = 0; row < sys.size(); ++row) {
            if (row == rank || sys[row][c].is_zero()) continue;
            BigRat f = sys[row][c];
            for (std::size_t k = c; k <= cols; ++k) sys[row][k] -= f * sys[rank][k];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t row = rank; row < sys.size(); ++row) {
        if (!sys[row][cols].is_zero()) throw NotFound("coefficient system is inconsistent");
    }
    Gram g(m, std::vector<BigRat>(m));
    for (std::size_t k = 0; k < rank; ++k) {
        const auto& [i, j] = unknowns[pivot_col[k]];
        g[i][j] = g[j][i] = sys[k][cols];
    }
    return g;
}

// L D L^T in basis order (largest degree, then lex, first). Returns the
// failure reason instead of squares when a pivot rules the matrix out.
std::variant<std::vector<RationalFunction>, std::string> factor(Gram g, const std::vector<Monomial>& basis,
                                                                std::size_t nvars) {
    const std::size_t m = basis.size();
    std::vector<RationalFunction> squares;
    for (std::size_t k = 0; k < m; ++k) {
        const BigRat d = g[k][k];
        if (d.sign() < 0) return std::string("negative pivot in the Gram factorization");
        if (d.is_zero()) {
            for (std::size_t j = k + 1; j < m; ++j) {
                if (!g[k][j].is_zero()) return std::string("zero pivot with a nonzero row in the Gram factorization");
            }
            continue;
        }
        std::vector<Polynomial::Term> terms{{basis[k], BigRat(1)}};
        for (std::size_t j = k + 1; j < m; ++j) {
            if (!g[k][j].is_zero()) terms.push_back({basis[j], g[k][j] / d});
        }
        Polynomial row = Polynomial::from_terms(nvars, std::move(terms));
        for (const auto& s : sos_constant(d, nvars).squares) squares.emplace_back(row * s.num().constant_value());
        for (std::size_t i = k + 1; i < m; ++i) {
            if (g[i][k].is_zero()) continue;
            BigRat f = g[i][k] / d;
            for (std::size_t j = k + 1; j < m; ++j) g[i][j] -= f * g[k][j];
        }
    }
    return squares;
}

}  // namespace

ScalarSOSCert sos_gram_attempt(const Polynomial& p) {
    const std::size_t nvars = p.nvars();
    if (p.is_zero()) return ScalarSOSCert{RationalFunction(p), {}, provider::kGram, std::nullopt};
    const std::vector<Monomial> basis = candidate_basis(p);
    const std::size_t m = basis.size();
    if (m == 0) throw NotFound("empty monomial basis");

    // Two column orders: off-diagonal unknowns first (cross terms absorb
    // shared monomials, giving e.g. one square for a perfect square), then
    // diagonal unknowns first.
    std::vector<std::pair<std::size_t, std::size_t>> diagonal, off_diagonal;
    for (std::size_t i = 0; i < m; ++i) {
        diagonal.emplace_back(i, i);
        for (std::size_t j = i + 1; j < m; ++j) off_diagonal.emplace_back(i, j);
    }
    auto off_first = off_diagonal;
    off_first.insert(off_first.end(), diagonal.begin(), diagonal.end());
    auto diag_first = diagonal;
    diag_first.insert(diag_first.end(), off_diagonal.begin(), off_diagonal.end());

    std::string reason;
    for (const auto* order : {&off_first, &diag_first}) {
        auto result = factor(particular_solution(p, basis, *order), basis, nvars);
        if (auto* why = std::get_if<std::string>(&result)) {
            reason = *why;
            continue;
        }
        ScalarSOSCert cert{RationalFunction(p), std::move(std::get<0>(result)), provider::kGram, std::nullopt};
        if (!verify_scalar_cert(cert)) throw VerificationFailed("Gram factorization does not reproduce the polynomial");
        return cert;
    }
    throw NotFound(reason);
}

}  // namespace matsos
