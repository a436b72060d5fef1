#include "qumbral/polynomial.hpp"

#include <stdexcept>

namespace qumbral {

namespace {
const Rational kZero;
} // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(std::size_t n, const Rational& c) {
    std::vector<Rational> coeffs(n + 1);
    coeffs[n] = c;
    return Polynomial(std::move(coeffs));
}

const Rational& Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : kZero;
}

const Rational& Polynomial::leading_coeff() const {
    if (coeffs_.empty())
        throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Polynomial operator-(const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_.size());
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k)
        out[k] = -p.coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = a.coeff(k) + b.coeff(k);
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = a.coeff(k) - b.coeff(k);
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
    std::vector<Rational> out(p.coeffs_.size());
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k)
        out[k] = s * p.coeffs_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1)
        return Polynomial();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        out[k - 1] = Rational(static_cast<long long>(k)) * coeffs_[k];
    return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& x0) const {
    Rational acc;
    for (std::size_t k = coeffs_.size(); k-- > 0;)
        acc = acc * x0 + coeffs_[k];
    return acc;
}

Polynomial Polynomial::shift(const Rational& y) const {
    if (is_zero() || y.is_zero())
        return *this;
    // q_j = sum_{n >= j} c_n C(n, j) y^{n-j}
    std::size_t deg = coeffs_.size() - 1;
    std::vector<Rational> ypow(deg + 1);
    ypow[0] = Rational(1);
    for (std::size_t i = 1; i <= deg; ++i)
        ypow[i] = ypow[i - 1] * y;
    std::vector<Rational> out(deg + 1);
    for (std::size_t n = 0; n <= deg; ++n) {
        if (coeffs_[n].is_zero())
            continue;
        for (std::size_t j = 0; j <= n; ++j)
            out[j] += coeffs_[n] * Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(j))) * ypow[n - j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scale_argument(const Rational& a) const {
    std::vector<Rational> out(coeffs_.size());
    Rational apow(1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        out[k] = coeffs_[k] * apow;
        apow *= a;
    }
    return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
    if (is_zero())
        return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero())
            continue;
        Rational mag = abs(c);
        if (s.empty()) {
            if (c.sign() < 0)
                s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        bool unit = mag.is_one() && k > 0;
        if (!unit)
            s += mag.str();
        if (k > 0) {
            if (!unit)
                s += "*";
            s += "x";
            if (k > 1)
                s += "^" + std::to_string(k);
        }
    }
    return s;
}

} // namespace qumbral
