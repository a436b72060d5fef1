#include "qumbral/rational.hpp"

#include <cctype>

namespace qumbral {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw DivisionByZero("rational with zero denominator");
    canonicalize();
}

void Rational::canonicalize() {
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    r.num_ = a.num_ * b.den_ - b.num_ * a.den_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_;
    r.canonicalize();
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero())
        throw DivisionByZero("division by zero rational");
    Rational r;
    r.num_ = a.num_ * b.den_;
    r.den_ = a.den_ * b.num_;
    r.canonicalize();
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto is_integer_token = [](std::string_view s) {
        if (s.empty())
            return false;
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };

    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_integer_token(text))
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        return Rational(BigInt(std::string(text)));
    }
    std::string_view top = text.substr(0, slash);
    std::string_view bottom = text.substr(slash + 1);
    if (!is_integer_token(top) || !is_integer_token(bottom))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    return Rational(BigInt(std::string(top)), BigInt(std::string(bottom)));
}

std::string Rational::str() const {
    std::string s = num_.str();
    if (den_ != 1) {
        s += '/';
        s += den_.str();
    }
    return s;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

Rational pow(const Rational& r, long long e) {
    if (e == 0)
        return Rational(1);
    if (e < 0) {
        if (r.is_zero())
            throw DivisionByZero("zero raised to a negative power");
        return pow(Rational(1) / r, -e);
    }
    Rational base = r;
    Rational acc(1);
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i)
        f *= i;
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt c = 1;
    for (unsigned i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1; // exact: c is always an integer binomial prefix
    }
    return c;
}

} // namespace qumbral
