#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace matsos {

/// Exponent vector x1^e1 * ... * xv^ev. Ordered by graded lexicographic
/// order with x1 > x2 > ... > xv.
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps);

    std::size_t nvars() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const noexcept { return exps_; }
    std::uint64_t degree() const noexcept { return degree_; }
    bool is_one() const noexcept { return degree_ == 0; }

    /// New monomial with the exponent of `var` replaced.
    Monomial with_exponent(std::size_t var, Exponent e) const;

    Monomial operator*(const Monomial& rhs) const;
    bool divides(const Monomial& other) const;
    /// Caller guarantees divides(other).
    Monomial quotient_of(const Monomial& other) const;
    bool all_even() const;
    /// Exponents halved; caller guarantees all_even().
    Monomial half() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

    std::size_t hash() const noexcept;

private:
    std::vector<Exponent> exps_;
    std::uint64_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace matsos
