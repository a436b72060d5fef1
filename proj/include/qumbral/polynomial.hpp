#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qumbral/rational.hpp"

namespace qumbral {

/// Dense polynomial in x over Rational, canonical form (trailing zero
/// coefficients trimmed). The zero polynomial has no coefficients and
/// reports degree -1, standing in for degree minus infinity.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(const Rational& c);
    /// c * x^n.
    static Polynomial monomial(std::size_t n, const Rational& c = Rational(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rational& coeff(std::size_t k) const;
    const Rational& leading_coeff() const;

    friend Polynomial operator-(const Polynomial& p);
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Rational& s) { return s * p; }

    Polynomial& operator+=(const Polynomial& b) { *this = *this + b; return *this; }
    Polynomial& operator-=(const Polynomial& b) { *this = *this - b; return *this; }
    Polynomial& operator*=(const Polynomial& b) { *this = *this * b; return *this; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// d/dx.
    Polynomial derivative() const;

    /// p(x0), exactly.
    Rational evaluate(const Rational& x0) const;

    /// p(x + y) by binomial expansion.
    Polynomial shift(const Rational& y) const;

    /// p(a x): coefficient k picks up a^k.
    Polynomial scale_argument(const Rational& a) const;

    /// "c0 + c1*x + ..." with zero terms skipped.
    std::string str() const;

private:
    std::vector<Rational> coeffs_; // ascending powers, last entry nonzero
    void trim();
};

} // namespace qumbral
