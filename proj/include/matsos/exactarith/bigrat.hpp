#pragma once

// Arbitrary-precision rationals over GMP. Every BigRat is stored in
// canonical form (positive denominator, coprime parts), so structural
// equality is value equality.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace matsos {

using BigInt = mpz_class;

class BigRat {
public:
    BigRat() = default;
    BigRat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    BigRat(const BigInt& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZero when `den` is zero.
    BigRat(const BigInt& num, const BigInt& den);

    /// Accepts "a" or "a/b" with an optional leading sign.
    static BigRat parse(std::string_view text);

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }

    BigRat abs() const;
    /// Throws DivisionByZero on zero.
    BigRat inverse() const;

    BigRat operator-() const;
    BigRat& operator+=(const BigRat& rhs);
    BigRat& operator-=(const BigRat& rhs);
    BigRat& operator*=(const BigRat& rhs);
    BigRat& operator/=(const BigRat& rhs);

    friend BigRat operator+(BigRat lhs, const BigRat& rhs) { return lhs += rhs; }
    friend BigRat operator-(BigRat lhs, const BigRat& rhs) { return lhs -= rhs; }
    friend BigRat operator*(BigRat lhs, const BigRat& rhs) { return lhs *= rhs; }
    friend BigRat operator/(BigRat lhs, const BigRat& rhs) { return lhs /= rhs; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "a" for integers, "a/b" otherwise.
    std::string to_string() const;
    std::size_t hash() const;

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& q);

/// Floor of the square root of a nonnegative integer.
BigInt isqrt(const BigInt& n);
bool is_perfect_square(const BigInt& n);

/// If q = r^2 for a rational r >= 0, stores r and returns true.
bool rational_sqrt(const BigRat& q, BigRat& root);

}  // namespace matsos
