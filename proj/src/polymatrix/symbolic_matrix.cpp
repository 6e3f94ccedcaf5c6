#include "matsos/polymatrix/symbolic_matrix.hpp"

#include "matsos/errors.hpp"

#include <optional>

namespace matsos {

namespace {

// Denominator shared by every nonzero entry, if there is one.
std::optional<Polynomial> shared_denominator(const SymbolicMatrix& m) {
    std::optional<Polynomial> den;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const auto& e = m(i, j);
            if (e.is_zero()) continue;
            if (!den) {
                den = e.den();
            } else if (!(*den == e.den())) {
                return std::nullopt;
            }
        }
    }
    if (!den) den = Polynomial::constant(BigRat(1), m.nvars());
    return den;
}

}  // namespace

SymbolicMatrix::SymbolicMatrix(std::size_t n, std::size_t nvars)
    : n_(n), nvars_(nvars), entries_(n * n, RationalFunction(nvars)) {}

SymbolicMatrix SymbolicMatrix::identity(std::size_t n, std::size_t nvars) {
    SymbolicMatrix m(n, nvars);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RationalFunction::constant(BigRat(1), nvars);
    return m;
}

SymbolicMatrix SymbolicMatrix::from_polynomials(const PolyMatrix& rows, std::size_t nvars) {
    SymbolicMatrix m(rows.size(), nvars);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw DomainError("matrix is not square");
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (rows[i][j].nvars() != nvars) throw DomainError("matrix entry over wrong variable count");
            m(i, j) = RationalFunction(rows[i][j]);
        }
    }
    return m;
}

bool SymbolicMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (!((*this)(i, j) == (*this)(j, i))) return false;
        }
    }
    return true;
}

bool SymbolicMatrix::is_polynomial() const {
    for (const auto& e : entries_) {
        if (!e.is_polynomial()) return false;
    }
    return true;
}

bool SymbolicMatrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

PolyMatrix SymbolicMatrix::polynomial_entries() const {
    PolyMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            auto p = (*this)(i, j).as_polynomial();
            if (!p) throw DomainError("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                      ") is not a polynomial");
            out[i].push_back(std::move(*p));
        }
    }
    return out;
}

RationalFunction SymbolicMatrix::trace() const {
    RationalFunction t(nvars_);
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

SymbolicMatrix SymbolicMatrix::transpose() const {
    SymbolicMatrix t(n_, nvars_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

SymbolicMatrix SymbolicMatrix::reduced() const {
    SymbolicMatrix out = *this;
    for (auto& e : out.entries_) e = e.reduced();
    return out;
}

void SymbolicMatrix::check_same_shape(const SymbolicMatrix& other) const {
    if (n_ != other.n_) throw DomainError("matrix dimension mismatch");
    if (nvars_ != other.nvars_) throw DomainError("matrices over different variable counts");
}

SymbolicMatrix& SymbolicMatrix::operator+=(const SymbolicMatrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

SymbolicMatrix& SymbolicMatrix::operator-=(const SymbolicMatrix& rhs) {
    check_same_shape(rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

SymbolicMatrix operator*(const SymbolicMatrix& a, const SymbolicMatrix& b) {
    a.check_same_shape(b);
    const std::size_t n = a.n_;
    SymbolicMatrix out(n, a.nvars_);
    auto da = shared_denominator(a);
    auto db = da ? shared_denominator(b) : std::nullopt;
    if (da && db) {
        // Multiply numerators as polynomials and divide once.
        Polynomial den = *da * *db;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Polynomial acc(a.nvars_);
                for (std::size_t k = 0; k < n; ++k) {
                    const auto& x = a(i, k);
                    const auto& y = b(k, j);
                    if (x.is_zero() || y.is_zero()) continue;
                    acc += x.num() * y.num();
                }
                out(i, j) = acc.is_zero() ? RationalFunction(a.nvars_) : RationalFunction(std::move(acc), den);
            }
        }
        return out;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            RationalFunction acc(a.nvars_);
            for (std::size_t k = 0; k < n; ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                acc += a(i, k) * b(k, j);
            }
            out(i, j) = std::move(acc);
        }
    }
    return out;
}

SymbolicMatrix operator*(const RationalFunction& c, const SymbolicMatrix& m) {
    if (c.nvars() != m.nvars_) throw DomainError("scalar and matrix over different variable counts");
    SymbolicMatrix out = m;
    for (auto& e : out.entries_) e = c * e;
    return out;
}

bool operator==(const SymbolicMatrix& a, const SymbolicMatrix& b) {
    if (a.n_ != b.n_ || a.nvars_ != b.nvars_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        if (!(a.entries_[k] == b.entries_[k])) return false;
    }
    return true;
}

RatMatrix SymbolicMatrix::eval(std::span<const BigRat> point) const {
    RatMatrix out(n_, std::vector<BigRat>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) out[i][j] = (*this)(i, j).eval(point);
    }
    return out;
}

SymbolicMatrix mat_add(const SymbolicMatrix& a, const SymbolicMatrix& b) { return a + b; }
SymbolicMatrix mat_mul(const SymbolicMatrix& a, const SymbolicMatrix& b) { return a * b; }
SymbolicMatrix mat_scalar_mul(const RationalFunction& c, const SymbolicMatrix& a) { return c * a; }

SymbolicMatrix mat_pow(const SymbolicMatrix& a, unsigned k) {
    SymbolicMatrix result = SymbolicMatrix::identity(a.dim(), a.nvars());
    SymbolicMatrix base = a;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

SymbolicMatrix eval_at_matrix(const UnivarPoly& f, const SymbolicMatrix& a) {
    if (f.nvars() != a.nvars()) throw DomainError("polynomial and matrix over different variable counts");
    const std::size_t n = a.dim();
    if (f.is_zero()) return SymbolicMatrix(n, a.nvars());
    auto [coeffs, den] = f.cleared();
    SymbolicMatrix acc(n, a.nvars());
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (k + 1 < coeffs.size()) acc = acc * a;
        if (!coeffs[k].is_zero()) {
            for (std::size_t i = 0; i < n; ++i) acc(i, i) += RationalFunction(coeffs[k]);
        }
    }
    if (den.is_one()) return acc;
    return RationalFunction(Polynomial::constant(BigRat(1), a.nvars()), den) * acc;
}

BigRat rational_det(RatMatrix m) {
    const std::size_t n = m.size();
    BigRat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return BigRat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        BigRat inv = m[col][col].inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            BigRat factor = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

}  // namespace matsos
