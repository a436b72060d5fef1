#include "qumbral/numbers.hpp"

namespace qumbral {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1)
            r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Counts the exact power of p dividing n (n != 0).
long long prime_multiplicity(BigInt n, const BigInt& p) {
    long long v = 0;
    n = boost::multiprecision::abs(n);
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, p, q, r);
        if (!r.is_zero())
            return v;
        n = q;
        ++v;
    }
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    // n - 1 = d * 2^s with d odd; the fixed witness set below is exact
    // for every n < 2^64.
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Valuation padic_valuation(const Rational& r, std::uint64_t p) {
    if (!is_prime(p))
        throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (r.is_zero())
        return Valuation::infinite();
    BigInt bp(p);
    return Valuation::of(prime_multiplicity(r.num(), bp) - prime_multiplicity(r.den(), bp));
}

Rational q_bracket(unsigned x, const Rational& q) {
    if (q.is_one())
        return Rational(static_cast<long long>(x));
    return (pow(q, x) - Rational(1)) / (q - Rational(1));
}

Rational q_bracket_neg(unsigned x, const Rational& q) {
    if (q == Rational(-1))
        throw DivisionByZero("[x]_{-q} undefined at q = -1");
    return (Rational(1) - pow(-q, x)) / (Rational(1) + q);
}

QWeight::QWeight(Rational q, Rational zeta) : q_(std::move(q)), zeta_(std::move(zeta)) {
    if (q_ == Rational(-1))
        throw InvalidWeight("q = -1 makes [2]_q vanish");
    if ((Rational(1) + q_ * zeta_).is_zero())
        throw InvalidWeight("1 + q*zeta = 0: generating function singular at t = 0");
}

QWeight QWeight::power(unsigned d) const {
    return QWeight(pow(q_, d), pow(zeta_, d));
}

} // namespace qumbral
