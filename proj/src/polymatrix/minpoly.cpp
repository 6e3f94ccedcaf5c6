#include "matsos/polymatrix/minpoly.hpp"

#include "matsos/errors.hpp"
#include "matsos/polymatrix/psd_check.hpp"

namespace matsos {

namespace {

std::vector<std::vector<std::size_t>> index_sets(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t size = 1; size <= n; ++size) {
        // Lexicographic combinations of `size` indices out of n.
        std::vector<std::size_t> idx(size);
        for (std::size_t k = 0; k < size; ++k) idx[k] = k;
        for (;;) {
            out.push_back(idx);
            std::size_t k = size;
            while (k > 0 && idx[k - 1] == n - size + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t m = k; m < size; ++m) idx[m] = idx[m - 1] + 1;
        }
    }
    return out;
}

}  // namespace

Polynomial det_bareiss(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial::constant(BigRat(1), 0);
    const std::size_t nvars = m[0][0].nvars();
    for (const auto& row : m) {
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    }
    bool negate = false;
    Polynomial prev = Polynomial::constant(BigRat(1), nvars);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return Polynomial(nvars);
            std::swap(m[r], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                if (prev.is_one()) {
                    m[i][j] = std::move(num);
                } else {
                    auto q = divide_exact(num, prev);
                    if (!q) throw VerificationFailed("fraction-free elimination produced an inexact division");
                    m[i][j] = std::move(*q);
                }
            }
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return negate ? -det : det;
}

Polynomial det_bareiss(const SymbolicMatrix& a) {
    if (a.dim() == 0) return Polynomial::constant(BigRat(1), a.nvars());
    return det_bareiss(a.polynomial_entries());
}

std::vector<PrincipalMinor> principal_minors(const SymbolicMatrix& a) {
    PolyMatrix entries = a.polynomial_entries();
    std::vector<PrincipalMinor> out;
    for (auto& rows : index_sets(a.dim())) {
        PolyMatrix sub;
        for (auto i : rows) {
            std::vector<Polynomial> row;
            for (auto j : rows) row.push_back(entries[i][j]);
            sub.push_back(std::move(row));
        }
        out.push_back({std::move(rows), det_bareiss(std::move(sub))});
    }
    return out;
}

UnivarPoly charpoly(const SymbolicMatrix& a) {
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    const std::size_t n = a.dim();
    const std::size_t nvars = a.nvars();
    std::vector<RationalFunction> c(n + 1, RationalFunction(nvars));
    c[n] = RationalFunction::constant(BigRat(1), nvars);
    SymbolicMatrix am(n, nvars);  // A * M_{k-1}, with M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        SymbolicMatrix m = am;
        for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
        am = a * m;
        c[n - k] = RationalFunction::constant(BigRat(BigInt(-1), BigInt(static_cast<long>(k))), nvars) * am.trace();
    }
    return UnivarPoly(std::move(c), nvars);
}

UnivarPoly MinPolyForm::to_univar() const {
    const std::size_t nvars = a.empty() ? 0 : a.front().nvars();
    std::vector<RationalFunction> coeffs;
    for (int i = 0; i <= d; ++i) {
        const Polynomial& ai = a[static_cast<std::size_t>(i)];
        coeffs.emplace_back((d - i) % 2 == 0 ? ai : -ai);
    }
    return UnivarPoly(std::move(coeffs), nvars);
}

MinPolyForm alternating_form(const UnivarPoly& p) {
    if (p.is_zero()) throw DomainError("alternating form of the zero polynomial");
    const std::size_t nvars = p.nvars();
    if (!(p.leading() == RationalFunction::constant(BigRat(1), nvars))) {
        throw DomainError("alternating form needs a monic polynomial");
    }
    MinPolyForm mp;
    mp.d = p.degree();
    for (int i = 0; i <= mp.d; ++i) {
        auto c = p.coeff(static_cast<std::size_t>(i)).as_polynomial();
        if (!c) throw DomainError("minimal polynomial coefficient is not a polynomial");
        mp.a.push_back((mp.d - i) % 2 == 0 ? *c : -*c);
    }
    return mp;
}

UnivarPoly krylov_minimal_polynomial(const SymbolicMatrix& a) {
    const std::size_t n = a.dim();
    const std::size_t nvars = a.nvars();
    if (n == 0) throw DomainError("minimal polynomial of an empty matrix");
    struct Row {
        std::vector<RationalFunction> vec;
        std::size_t pivot;
        std::vector<RationalFunction> comb;  // coefficients over I, A, A^2, ...
    };
    std::vector<Row> basis;
    SymbolicMatrix power = SymbolicMatrix::identity(n, nvars);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<RationalFunction> w;
        w.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) w.push_back(power(i, j));
        }
        std::vector<RationalFunction> comb(k + 1, RationalFunction(nvars));
        comb[k] = RationalFunction::constant(BigRat(1), nvars);
        for (const auto& row : basis) {
            RationalFunction f = w[row.pivot];
            if (f.is_zero()) continue;
            for (std::size_t t = 0; t < w.size(); ++t) {
                if (!row.vec[t].is_zero()) w[t] = (w[t] - f * row.vec[t]).reduced();
            }
            for (std::size_t t = 0; t < row.comb.size(); ++t) {
                if (!row.comb[t].is_zero()) comb[t] = (comb[t] - f * row.comb[t]).reduced();
            }
        }
        std::size_t pivot = 0;
        while (pivot < w.size() && w[pivot].is_zero()) ++pivot;
        if (pivot == w.size()) return UnivarPoly(std::move(comb), nvars);
        RationalFunction inv = w[pivot].inverse();
        for (auto& x : w) x = (x * inv).reduced();
        for (auto& x : comb) x = (x * inv).reduced();
        basis.push_back({std::move(w), pivot, std::move(comb)});
        power = (power * a).reduced();
    }
    throw VerificationFailed("no linear dependence among the first n+1 powers");
}

MinPolyForm minimal_polynomial(const SymbolicMatrix& a) {
    if (a.dim() == 0) throw DomainError("minimal polynomial of an empty matrix");
    if (!a.is_symmetric()) throw DomainError("minimal polynomial requires a symmetric matrix");
    UnivarPoly candidate = squarefree_part(charpoly(a));
    if (eval_at_matrix(candidate, a).is_zero()) return alternating_form(candidate);
    UnivarPoly krylov = krylov_minimal_polynomial(a).monic();
    if (gcd(krylov, krylov.derivative()).degree() > 0) {
        throw NotDiagonalizable("minimal polynomial has a repeated factor; the matrix is not diagonalizable");
    }
    return alternating_form(krylov);
}

LemmaReport check_lemma_form(const MinPolyForm& mp, int samples, std::uint64_t seed) {
    if (mp.d < 1 || mp.a.size() != static_cast<std::size_t>(mp.d) + 1) {
        throw DomainError("malformed minimal polynomial form");
    }
    if (mp.a[1].is_zero()) {
        if (mp.a[0].is_zero()) throw LemmaViolation("t^2 divides the minimal polynomial", -1);
        throw LemmaViolation("a1 is zero", 1);
    }
    const std::size_t nvars = mp.a[0].nvars();
    std::mt19937_64 rng(seed);
    for (int s = 0; s < samples; ++s) {
        auto point = random_rational_point(rng, nvars);
        for (int i = 0; i <= mp.d; ++i) {
            if (mp.a[static_cast<std::size_t>(i)].eval(point).sign() < 0) {
                std::vector<std::string> witness;
                for (const auto& v : point) witness.push_back(v.to_string());
                throw LemmaViolation("a" + std::to_string(i) + " is negative at a sample point", i,
                                     std::move(witness));
            }
        }
    }
    return {samples};
}

std::vector<std::vector<std::size_t>> principal_index_sets(std::size_t n) { return index_sets(n); }

}  // namespace matsos
