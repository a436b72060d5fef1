#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "qumbral/errors.hpp"

namespace qumbral {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar over arbitrary-precision integers.
///
/// Always stored in lowest terms with a positive denominator, so equality
/// is plain field-by-field comparison. Every arithmetic result is
/// re-canonicalized eagerly.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    template <std::integral T>
    Rational(T v) : num_(v), den_(1) {}
    Rational(BigInt v) : num_(std::move(v)), den_(1) {}
    Rational(BigInt num, BigInt den);
    template <std::integral T, std::integral U>
    Rational(T num, U den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed
    /// input and DivisionByZero on a zero denominator.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    friend Rational operator-(const Rational& a);
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

    /// "num/den", with "/den" omitted for integers.
    std::string str() const;

private:
    BigInt num_;
    BigInt den_; // > 0, coprime to num_
    void canonicalize();
};

Rational abs(const Rational& r);

/// r^e for any integer e; negative exponents invert (DivisionByZero on 0).
Rational pow(const Rational& r, long long e);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

} // namespace qumbral
