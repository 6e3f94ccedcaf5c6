#include "matsos/multipoly/univar_poly.hpp"

#include "matsos/errors.hpp"

namespace matsos {

namespace {

using PolyCoeffs = std::vector<Polynomial>;

void trim(PolyCoeffs& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

// Q[x][t] -> Q[x, t] with t appended as the last variable.
Polynomial embed(const PolyCoeffs& coeffs, std::size_t nvars) {
    std::vector<Polynomial::Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& t : coeffs[k].terms()) {
            auto exps = t.mono.exponents();
            exps.push_back(static_cast<Monomial::Exponent>(k));
            terms.push_back({Monomial(std::move(exps)), t.coeff});
        }
    }
    return Polynomial::from_terms(nvars + 1, std::move(terms));
}

PolyCoeffs extract(const Polynomial& p, std::size_t nvars) {
    PolyCoeffs out;
    std::vector<std::vector<Polynomial::Term>> buckets(static_cast<std::size_t>(p.degree_in(nvars)) + 1);
    for (const auto& t : p.terms()) {
        auto exps = t.mono.exponents();
        auto k = exps.back();
        exps.pop_back();
        buckets[k].push_back({Monomial(std::move(exps)), t.coeff});
    }
    for (auto& b : buckets) out.push_back(Polynomial::from_terms(nvars, std::move(b)));
    return out;
}

// Pseudo-division lc(g)^delta * f = q*g + r with delta = deg f - deg g + 1.
struct PseudoDivision {
    PolyCoeffs quotient;
    PolyCoeffs remainder;
    Polynomial scale;  // lc(g)^delta
};

PseudoDivision pseudo_divide(PolyCoeffs f, const PolyCoeffs& g, std::size_t nvars) {
    const Polynomial one = Polynomial::constant(BigRat(1), nvars);
    trim(f);
    const std::size_t dg = g.size() - 1;
    if (f.empty() || f.size() - 1 < dg) return {{}, f, one};
    const std::size_t delta = f.size() - dg;
    const Polynomial& lc_g = g.back();
    PolyCoeffs q(delta, Polynomial(nvars));
    Polynomial scale = one;
    for (std::size_t step = 0; step < delta; ++step) {
        const std::size_t top = dg + (delta - 1 - step);
        Polynomial lead = top < f.size() ? f[top] : Polynomial(nvars);
        for (auto& c : f) c *= lc_g;
        for (auto& c : q) c *= lc_g;
        scale *= lc_g;
        if (!lead.is_zero()) {
            const std::size_t shift = top - dg;
            q[shift] += lead;
            for (std::size_t k = 0; k <= dg; ++k) f[k + shift] -= lead * g[k];
        }
        trim(f);
    }
    trim(q);
    return {std::move(q), std::move(f), std::move(scale)};
}

PolyCoeffs mul(const PolyCoeffs& a, const PolyCoeffs& b, std::size_t nvars) {
    if (a.empty() || b.empty()) return {};
    PolyCoeffs out(a.size() + b.size() - 1, Polynomial(nvars));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

PolyCoeffs sub(PolyCoeffs a, const PolyCoeffs& b, std::size_t nvars) {
    if (a.size() < b.size()) a.resize(b.size(), Polynomial(nvars));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

PolyCoeffs scaled(PolyCoeffs a, const Polynomial& c) {
    for (auto& x : a) x *= c;
    trim(a);
    return a;
}

}  // namespace

UnivarPoly::UnivarPoly(std::vector<RationalFunction> coeffs, std::size_t nvars)
    : nvars_(nvars), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (c.nvars() != nvars_) throw DomainError("univariate coefficient over wrong variable count");
    }
    trim();
}

UnivarPoly UnivarPoly::from_polynomials(const std::vector<Polynomial>& coeffs, std::size_t nvars) {
    std::vector<RationalFunction> rf;
    rf.reserve(coeffs.size());
    for (const auto& c : coeffs) rf.emplace_back(c);
    return UnivarPoly(std::move(rf), nvars);
}

UnivarPoly UnivarPoly::monomial(const RationalFunction& c, std::size_t k) {
    std::vector<RationalFunction> coeffs(k + 1, RationalFunction(c.nvars()));
    coeffs[k] = c;
    return UnivarPoly(std::move(coeffs), c.nvars());
}

void UnivarPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalFunction UnivarPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : RationalFunction(nvars_);
}

UnivarPoly UnivarPoly::operator-() const {
    UnivarPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& rhs) {
    if (rhs.nvars_ != nvars_) throw DomainError("univariate polynomials over different variable counts");
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), RationalFunction(nvars_));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& rhs) { return *this += -rhs; }

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
    if (a.nvars_ != b.nvars_) throw DomainError("univariate polynomials over different variable counts");
    if (a.is_zero() || b.is_zero()) return UnivarPoly(a.nvars_);
    std::vector<RationalFunction> out(a.coeffs_.size() + b.coeffs_.size() - 1, RationalFunction(a.nvars_));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UnivarPoly(std::move(out), a.nvars_);
}

UnivarPoly operator*(const RationalFunction& c, const UnivarPoly& f) {
    UnivarPoly out = f;
    for (auto& x : out.coeffs_) x = c * x;
    out.trim();
    return out;
}

bool operator==(const UnivarPoly& a, const UnivarPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
}

UnivarPoly UnivarPoly::derivative() const {
    std::vector<RationalFunction> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out.push_back(RationalFunction::constant(BigRat(static_cast<long>(i)), nvars_) * coeffs_[i]);
    }
    return UnivarPoly(std::move(out), nvars_);
}

UnivarPoly UnivarPoly::monic() const {
    if (is_zero()) return *this;
    RationalFunction inv = leading().inverse();
    UnivarPoly out = *this;
    for (auto& c : out.coeffs_) c = (c * inv).reduced();
    return out;
}

UnivarPoly UnivarPoly::reduced() const {
    UnivarPoly out = *this;
    for (auto& c : out.coeffs_) c = c.reduced();
    return out;
}

std::pair<std::vector<Polynomial>, Polynomial> UnivarPoly::cleared() const {
    Polynomial den = Polynomial::constant(BigRat(1), nvars_);
    for (const auto& c : coeffs_) {
        if (c.is_polynomial() || c.den() == den) continue;
        if (divide_exact(den, c.den())) continue;
        den = den * *divide_exact(c.den(), gcd(den, c.den()));
    }
    std::vector<Polynomial> nums;
    nums.reserve(coeffs_.size());
    for (const auto& c : coeffs_) nums.push_back(c.num() * *divide_exact(den, c.den()));
    return {std::move(nums), std::move(den)};
}

UnivarDivMod divmod(const UnivarPoly& f, const UnivarPoly& g) {
    if (g.is_zero()) throw DivisionByZero("univariate division by zero polynomial");
    const std::size_t nvars = f.nvars();
    UnivarPoly rem = f;
    if (f.degree() < g.degree()) return {UnivarPoly(nvars), rem};
    std::vector<RationalFunction> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1, RationalFunction(nvars));
    RationalFunction inv_lead = g.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= g.degree()) {
        auto shift = static_cast<std::size_t>(rem.degree() - g.degree());
        RationalFunction c = rem.leading() * inv_lead;
        q[shift] = c;
        UnivarPoly sub = UnivarPoly::monomial(c, shift) * g;
        // Force exact cancellation of the top coefficient.
        std::vector<RationalFunction> next = rem.coeffs();
        for (std::size_t i = 0; i < sub.coeffs().size(); ++i) next[i] -= sub.coeffs()[i];
        next.pop_back();
        rem = UnivarPoly(std::move(next), nvars);
    }
    return {UnivarPoly(std::move(q), nvars), rem};
}

UnivarPoly mod(const UnivarPoly& f, const UnivarPoly& g) { return divmod(f, g).remainder; }

UnivarPoly gcd(const UnivarPoly& f, const UnivarPoly& g) {
    if (f.nvars() != g.nvars()) throw DomainError("univariate polynomials over different variable counts");
    const std::size_t nvars = f.nvars();
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    // gcd over F[t] is the t-primitive part of the gcd in Q[x, t].
    Polynomial h = gcd(embed(f.cleared().first, nvars), embed(g.cleared().first, nvars));
    return UnivarPoly::from_polynomials(extract(h, nvars), nvars).monic();
}

ExtEuclidResult ext_euclid(const UnivarPoly& b, const UnivarPoly& p) {
    if (p.is_zero()) throw DivisionByZero("extended Euclid with zero modulus");
    if (b.nvars() != p.nvars()) throw DomainError("univariate polynomials over different variable counts");
    const std::size_t nvars = p.nvars();
    const Polynomial one = Polynomial::constant(BigRat(1), nvars);

    auto [b_num, b_den] = b.cleared();
    auto [p_num, p_den] = p.cleared();
    trim(b_num);

    // Invariant: r_k = s_k * b_num + w_k * p_num.
    PolyCoeffs r0 = p_num, r1 = b_num;
    PolyCoeffs s0, s1{one};
    PolyCoeffs w0{one}, w1;
    while (!r1.empty()) {
        PseudoDivision pd = pseudo_divide(r0, r1, nvars);
        if (pd.remainder.empty()) {
            r0 = std::move(r1);
            s0 = std::move(s1);
            w0 = std::move(w1);
            break;
        }
        PolyCoeffs s2 = sub(scaled(s0, pd.scale), mul(pd.quotient, s1, nvars), nvars);
        PolyCoeffs w2 = sub(scaled(w0, pd.scale), mul(pd.quotient, w1, nvars), nvars);
        PolyCoeffs r2 = std::move(pd.remainder);
        // Divide the whole relation by the common content to limit swell.
        Polynomial c(nvars);
        for (const auto* part : {&r2, &s2, &w2}) {
            for (const auto& x : *part) {
                c = gcd(c, x);
                if (c.is_constant() && !c.is_zero()) break;
            }
        }
        if (!c.is_zero() && !c.is_one()) {
            for (auto* part : {&r2, &s2, &w2}) {
                for (auto& x : *part) x = *divide_exact(x, c);
            }
        }
        PolyCoeffs all = r2;
        all.insert(all.end(), s2.begin(), s2.end());
        all.insert(all.end(), w2.begin(), w2.end());
        BigRat k = numeric_content(all);
        if (!k.is_one()) {
            BigRat inv = k.inverse();
            for (auto* part : {&r2, &s2, &w2}) {
                for (auto& x : *part) x *= inv;
            }
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
        w0 = std::move(w1);
        w1 = std::move(w2);
    }

    // r0 = s0 * (b_den * b) + w0 * (p_den * p); divide through by lc(r0).
    const Polynomial lead = r0.back();
    auto to_univar = [&](const PolyCoeffs& c, const Polynomial& factor) {
        std::vector<RationalFunction> out;
        out.reserve(c.size());
        for (const auto& x : c) out.emplace_back(x * factor, lead);
        return UnivarPoly(std::move(out), nvars);
    };
    ExtEuclidResult result{to_univar(r0, one).reduced(), to_univar(s0, b_den), to_univar(w0, p_den)};
    return result;
}

UnivarPoly squarefree_part(const UnivarPoly& f) {
    if (f.is_zero()) throw DomainError("squarefree part of the zero polynomial");
    UnivarPoly g = gcd(f, f.derivative());
    return divmod(f, g).quotient.monic();
}

}  // namespace matsos
