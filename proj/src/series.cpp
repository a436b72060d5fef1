#include "qumbral/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "qumbral/errors.hpp"

namespace qumbral {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("series needs at least the constant coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, std::size_t precision) {
    TruncatedSeries f(precision);
    f.coeffs_[0] = c;
    return f;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, const Rational& c, std::size_t precision) {
    if (k > precision)
        throw std::invalid_argument("monomial degree exceeds precision");
    TruncatedSeries f(precision);
    f.coeffs_[k] = c;
    return f;
}

TruncatedSeries TruncatedSeries::exp(const Rational& y, std::size_t precision) {
    TruncatedSeries f(precision);
    f.coeffs_[0] = Rational(1);
    for (std::size_t k = 1; k <= precision; ++k)
        f.coeffs_[k] = f.coeffs_[k - 1] * y / Rational(static_cast<long long>(k));
    return f;
}

const Rational& TruncatedSeries::coeff(std::size_t k) const {
    if (k >= coeffs_.size())
        throw std::out_of_range("coefficient index beyond series precision");
    return coeffs_[k];
}

Rational TruncatedSeries::umbral_coeff(std::size_t k) const {
    return coeff(k) * Rational(factorial(static_cast<unsigned>(k)));
}

std::optional<std::size_t> TruncatedSeries::order() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero())
            return k;
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t precision) const {
    if (precision >= this->precision())
        return *this;
    TruncatedSeries f(precision);
    std::copy(coeffs_.begin(), coeffs_.begin() + precision + 1, f.coeffs_.begin());
    return f;
}

TruncatedSeries operator-(const TruncatedSeries& f) {
    TruncatedSeries r(f.precision());
    for (std::size_t k = 0; k < f.coeffs_.size(); ++k)
        r.coeffs_[k] = -f.coeffs_[k];
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k)
        r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    TruncatedSeries r(n);
    for (std::size_t k = 0; k <= n; ++k)
        r.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    std::size_t n = std::min(a.precision(), b.precision());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j].is_zero())
                continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

TruncatedSeries operator*(const Rational& s, const TruncatedSeries& f) {
    TruncatedSeries r(f.precision());
    for (std::size_t k = 0; k < f.coeffs_.size(); ++k)
        r.coeffs_[k] = s * f.coeffs_[k];
    return r;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& other) const {
    std::size_t n = std::min(precision(), other.precision());
    for (std::size_t k = 0; k <= n; ++k)
        if (coeffs_[k] != other.coeffs_[k])
            return false;
    return true;
}

TruncatedSeries TruncatedSeries::invert() const {
    if (coeffs_[0].is_zero())
        throw NotInvertible("series with zero constant term has no reciprocal");
    TruncatedSeries r(precision());
    // b_0 = 1/c_0 and b_n = -(sum_{k=1..n} c_k b_{n-k}) / c_0.
    r.coeffs_[0] = Rational(1) / coeffs_[0];
    for (std::size_t n = 1; n <= precision(); ++n) {
        Rational acc;
        for (std::size_t k = 1; k <= n; ++k)
            acc += coeffs_[k] * r.coeffs_[n - k];
        r.coeffs_[n] = -acc / coeffs_[0];
    }
    return r;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& g) const {
    if (!g.coeffs_[0].is_zero())
        throw CompositionDomain("inner series must have zero constant term");
    std::size_t n = std::min(precision(), g.precision());
    TruncatedSeries inner = g.truncated(n);
    // Horner evaluation of f at g. Coefficients of f beyond t^n cannot
    // reach t^0..t^n of the result because order(g) >= 1.
    TruncatedSeries r = TruncatedSeries::constant(coeffs_[n], n);
    for (std::size_t k = n; k-- > 0;) {
        r = r * inner;
        r.coeffs_[0] += coeffs_[k];
    }
    return r;
}

TruncatedSeries TruncatedSeries::comp_inverse() const {
    if (order() != std::optional<std::size_t>(1))
        throw NotDelta("compositional inverse requires order exactly 1");
    std::size_t n = precision();
    const Rational& f1 = coeffs_[1];
    TruncatedSeries h(n);
    h.coeffs_[1] = Rational(1) / f1;
    // Solve f(h(t)) = t order by order: the coefficient of t^k in
    // f(h) depends on h_k only through the linear term f_1 h_k, so each
    // step is a single division.
    for (std::size_t k = 2; k <= n; ++k) {
        TruncatedSeries probe = truncated(k).compose(h.truncated(k));
        h.coeffs_[k] = -probe.coeffs_[k] / f1;
    }
    return h;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (precision() == 0)
        return TruncatedSeries(0);
    TruncatedSeries r(precision() - 1);
    for (std::size_t k = 0; k + 1 <= precision(); ++k)
        r.coeffs_[k] = Rational(static_cast<long long>(k + 1)) * coeffs_[k + 1];
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries acc = TruncatedSeries::one(precision());
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1)
            acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

} // namespace qumbral
