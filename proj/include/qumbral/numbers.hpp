#pragma once

#include <cstdint>
#include <string>

#include "qumbral/rational.hpp"

namespace qumbral {

/// A p-adic valuation: an integer or +infinity (the valuation of 0).
class Valuation {
public:
    static Valuation infinite() { return Valuation(true, 0); }
    static Valuation of(long long v) { return Valuation(false, v); }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    long long value() const {
        if (infinite_)
            throw std::logic_error("value() on an infinite valuation");
        return v_;
    }

    friend bool operator==(const Valuation& a, const Valuation& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (a.infinite_)
            return false;
        if (b.infinite_)
            return true;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const Valuation& a, const Valuation& b) { return a < b || a == b; }
    friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
    friend bool operator>=(const Valuation& a, const Valuation& b) { return b <= a; }

    Valuation operator+(const Valuation& b) const {
        if (infinite_ || b.infinite_)
            return infinite();
        return of(v_ + b.v_);
    }
    /// Shift by a finite amount; infinity absorbs.
    Valuation operator+(long long d) const {
        return infinite_ ? infinite() : of(v_ + d);
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

private:
    Valuation(bool infinite, long long v) : infinite_(infinite), v_(v) {}
    bool infinite_;
    long long v_;
};

/// Deterministic Miller-Rabin, valid for every n < 2^64.
bool is_prime(std::uint64_t n);

/// v_p(r) = v_p(num) - v_p(den); +infinity for r = 0. Throws NotPrime.
Valuation padic_valuation(const Rational& r, std::uint64_t p);

/// [x]_q = (q^x - 1)/(q - 1), with the q -> 1 limit [x]_1 = x.
Rational q_bracket(unsigned x, const Rational& q);

/// [x]_{-q} = (1 - (-q)^x)/(1 + q). Throws DivisionByZero at q = -1.
Rational q_bracket_neg(unsigned x, const Rational& q);

/// The parameter pair (q, zeta). Valid iff q != -1 (so [2]_q != 0) and
/// 1 + q*zeta != 0 (so the weighted generating function is regular at 0).
class QWeight {
public:
    QWeight(Rational q, Rational zeta);

    const Rational& q() const { return q_; }
    const Rational& zeta() const { return zeta_; }
    Rational qzeta() const { return q_ * zeta_; }
    /// [2]_q = 1 + q.
    Rational two_bracket() const { return Rational(1) + q_; }

    /// The weight (q^d, zeta^d); throws InvalidWeight when singular.
    QWeight power(unsigned d) const;

    friend bool operator==(const QWeight& a, const QWeight& b) {
        return a.q_ == b.q_ && a.zeta_ == b.zeta_;
    }

private:
    Rational q_;
    Rational zeta_;
};

} // namespace qumbral
