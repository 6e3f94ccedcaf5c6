#include "matsos/matrixcert/certificate.hpp"

#include "matsos/errors.hpp"
#include "matsos/multipoly/parser.hpp"

#include <algorithm>

namespace matsos {

namespace {

std::string clip(std::string s) {
    constexpr std::size_t kMax = 160;
    if (s.size() > kMax) s = s.substr(0, kMax) + "...";
    return s;
}

std::string at(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

struct SquareClass {
    std::size_t first;  // index of the representative square
    std::size_t pi, pj;  // its first nonzero entry
    RationalFunction pivot_sq_sum;  // sum over members of M(pi, pj)^2
};

// sum(terms) == target without gcds: terms over the same denominator are
// merged, then everything is cross-multiplied.
bool sum_equals(const std::vector<const RationalFunction*>& terms, const RationalFunction& target) {
    std::vector<std::pair<Polynomial, Polynomial>> groups;  // (den, num)
    for (const auto* t : terms) {
        if (t->is_zero()) continue;
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == t->den(); });
        if (it == groups.end()) {
            groups.emplace_back(t->den(), t->num());
        } else {
            it->second += t->num();
        }
    }
    Polynomial lhs = Polynomial::constant(BigRat(0), target.nvars());
    Polynomial den = Polynomial::constant(BigRat(1), target.nvars());
    for (const auto& [d, num] : groups) {
        lhs = lhs * d + num * den;
        den = den * d;
    }
    return lhs * target.den() == target.num() * den;
}

bool proportional(const SymbolicMatrix& m, const SymbolicMatrix& rep, std::size_t pi, std::size_t pj) {
    const RationalFunction& mp = m(pi, pj);
    if (mp.is_zero()) return false;
    const RationalFunction& rp = rep(pi, pj);
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (m(i, j).is_zero() != rep(i, j).is_zero()) return false;
            if (m(i, j).is_zero()) continue;
            if (!(m(i, j) * rp == mp * rep(i, j))) return false;
        }
    }
    return true;
}

}  // namespace

std::size_t expected_square_count(const MinPolyForm& mp, const std::map<int, ScalarSOSCert>& scalar_certs) {
    std::size_t odd = 0, even = 0;
    for (int i = 0; i <= mp.d; ++i) {
        if (mp.a[static_cast<std::size_t>(i)].is_zero()) continue;
        std::size_t c = 0;
        if (auto it = scalar_certs.find(i); it != scalar_certs.end()) {
            c = it->second.squares.size();
        } else if (i == mp.d) {
            c = 1;
        }
        (i % 2 == 1 ? odd : even) += c;
    }
    return odd * even;
}

MatrixSOSCert build_squares(const SymbolicMatrix& a, const MinPolyForm& mp, const UnivarPoly& q,
                            std::map<int, ScalarSOSCert> scalar_certs, const VarSet& vars) {
    const std::size_t nvars = a.nvars();
    if (vars.size() != nvars || q.nvars() != nvars) throw DomainError("variable counts disagree");
    if (mp.d < 1 || mp.a.size() != static_cast<std::size_t>(mp.d) + 1) throw DomainError("malformed minimal polynomial");
    const RationalFunction one = RationalFunction::constant(BigRat(1), nvars);
    scalar_certs.try_emplace(mp.d, ScalarSOSCert{one, {one}, provider::kConstant, std::nullopt});
    for (int i = 0; i <= mp.d; ++i) {
        const Polynomial& ai = mp.a[static_cast<std::size_t>(i)];
        auto it = scalar_certs.find(i);
        if (it == scalar_certs.end()) {
            if (ai.is_zero()) continue;
            throw MissingScalarCert(i);
        }
        if (!(it->second.target == RationalFunction(ai)) || !verify_scalar_cert(it->second)) {
            throw VerificationFailed("scalar certificate for a" + std::to_string(i) + " does not check out");
        }
    }

    MatrixSOSCert cert;
    cert.dim = a.dim();
    cert.vars = vars;
    cert.minpoly = mp;
    cert.scalar_certs = std::move(scalar_certs);

    // q(A) * A^e for e = 0 .. d-1.
    std::vector<SymbolicMatrix> base{eval_at_matrix(q, a)};
    auto base_for = [&](std::size_t e) -> const SymbolicMatrix& {
        while (base.size() <= e) base.push_back(base.back() * a);
        return base[e];
    };
    for (int i = 1; i <= mp.d; i += 2) {
        if (mp.a[static_cast<std::size_t>(i)].is_zero()) continue;
        const auto& si = cert.scalar_certs.at(i).squares;
        for (int j = 0; j <= mp.d; j += 2) {
            if (mp.a[static_cast<std::size_t>(j)].is_zero()) continue;
            const auto& uj = cert.scalar_certs.at(j).squares;
            const SymbolicMatrix& m = base_for(static_cast<std::size_t>(i - 1 + j) / 2);
            for (const auto& s : si) {
                for (const auto& u : uj) cert.squares.push_back((s * u) * m);
            }
        }
    }
    cert.square_count = cert.squares.size();
    if (cert.square_count != expected_square_count(cert.minpoly, cert.scalar_certs)) {
        throw VerificationFailed("square count does not match the count law");
    }
    MatrixVerifyReport report = verify_matrix_cert(a, cert, true);
    if (!report.ok()) {
        throw VerificationFailed("constructed certificate fails verification: " + report.discrepancy->detail);
    }
    return cert;
}

MatrixVerifyReport verify_matrix_cert(const SymbolicMatrix& a, const MatrixSOSCert& cert, bool check_commutation) {
    MatrixVerifyReport rep;
    auto fail = [&](bool MatrixVerifyReport::*flag, std::string check, std::optional<std::size_t> square, std::size_t i,
                    std::size_t j, std::string detail) {
        rep.*flag = false;
        rep.discrepancy = MatrixDiscrepancy{std::move(check), square, i, j, std::move(detail)};
        return rep;
    };
    const std::size_t n = a.dim();
    if (cert.dim != n || a.nvars() != cert.vars.size()) {
        return fail(&MatrixVerifyReport::dimensions_ok, "dimension", std::nullopt, 0, 0,
                    "certificate is " + std::to_string(cert.dim) + "x" + std::to_string(cert.dim) + " over " +
                        std::to_string(cert.vars.size()) + " variables, matrix is " + std::to_string(n) + "x" +
                        std::to_string(n) + " over " + std::to_string(a.nvars()));
    }
    for (std::size_t k = 0; k < cert.squares.size(); ++k) {
        const auto& m = cert.squares[k];
        if (m.dim() != n || m.nvars() != a.nvars()) {
            return fail(&MatrixVerifyReport::dimensions_ok, "dimension", k, 0, 0,
                        "square " + std::to_string(k + 1) + " has the wrong shape");
        }
    }
    if (cert.square_count != cert.squares.size()) {
        return fail(&MatrixVerifyReport::count_ok, "count", std::nullopt, 0, 0,
                    "square_count is " + std::to_string(cert.square_count) + " but the certificate lists " +
                        std::to_string(cert.squares.size()) + " squares");
    }
    for (std::size_t k = 0; k < cert.squares.size(); ++k) {
        const auto& m = cert.squares[k];
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!(m(i, j) == m(j, i))) {
                    return fail(&MatrixVerifyReport::symmetric, "symmetry", k, i, j,
                                "square " + std::to_string(k + 1) + " differs from its transpose at " + at(i, j));
                }
            }
        }
    }

    std::vector<SquareClass> classes;
    for (std::size_t k = 0; k < cert.squares.size(); ++k) {
        const auto& m = cert.squares[k];
        bool placed = m.is_zero();
        for (auto c = classes.rbegin(); !placed && c != classes.rend(); ++c) {
            if (proportional(m, cert.squares[c->first], c->pi, c->pj)) {
                c->pivot_sq_sum += m(c->pi, c->pj) * m(c->pi, c->pj);
                placed = true;
            }
        }
        if (placed) continue;
        for (std::size_t idx = 0; idx < n * n; ++idx) {
            const std::size_t i = idx / n, j = idx % n;
            if (!m(i, j).is_zero()) {
                classes.push_back({k, i, j, m(i, j) * m(i, j)});
                break;
            }
        }
    }
    rep.classes = classes.size();

    std::vector<SymbolicMatrix> parts;
    for (const auto& c : classes) {
        // Member k is t_k * N with N the representative scaled to pivot 1,
        // so the class contributes (sum_k t_k^2) * N^2.
        const SymbolicMatrix& r = cert.squares[c.first];
        const SymbolicMatrix unit = (r(c.pi, c.pj).inverse() * r).reduced();
        parts.push_back(c.pivot_sq_sum.reduced() * (unit * unit));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<const RationalFunction*> terms;
            for (const auto& p : parts) terms.push_back(&p(i, j));
            if (!sum_equals(terms, a(i, j))) {
                return fail(&MatrixVerifyReport::sum_matches, "sum", std::nullopt, i, j,
                            "sum of squares differs from A at " + at(i, j) + ", where A has " +
                                clip(print_rf(a(i, j), cert.vars)));
            }
        }
    }

    if (!check_commutation) return rep;
    rep.commutation_checked = true;
    for (std::size_t c = 0; c < classes.size(); ++c) {
        const SymbolicMatrix& r = cert.squares[classes[c].first];
        if (!(r * a == a * r)) {
            return fail(&MatrixVerifyReport::commutes, "commutation", classes[c].first, 0, 0,
                        "square " + std::to_string(classes[c].first + 1) + " does not commute with A");
        }
        for (std::size_t d = c + 1; d < classes.size(); ++d) {
            const SymbolicMatrix& s = cert.squares[classes[d].first];
            if (!(r * s == s * r)) {
                return fail(&MatrixVerifyReport::commutes, "commutation", classes[d].first, 0, 0,
                            "squares " + std::to_string(classes[c].first + 1) + " and " +
                                std::to_string(classes[d].first + 1) + " do not commute");
            }
        }
    }
    return rep;
}

}  // namespace matsos
