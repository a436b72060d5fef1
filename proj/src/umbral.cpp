#include "qumbral/umbral.hpp"

#include <algorithm>
#include <stdexcept>

#include "qumbral/errors.hpp"

namespace qumbral {

ShefferPair::ShefferPair(TruncatedSeries g, TruncatedSeries f)
    : g_(std::move(g)), f_(std::move(f)) {
    if (g_.order() != std::optional<std::size_t>(0))
        throw NotInvertible("g must be an invertible series (order 0)");
    if (f_.order() != std::optional<std::size_t>(1))
        throw NotDelta("f must be a delta series (order 1)");
}

std::size_t ShefferPair::precision() const {
    return std::min(g_.precision(), f_.precision());
}

Rational apply_functional(const TruncatedSeries& f, const Polynomial& p) {
    if (p.is_zero())
        return Rational();
    std::size_t deg = static_cast<std::size_t>(p.degree());
    if (deg > f.precision())
        throw InsufficientPrecision("functional stored to t^" + std::to_string(f.precision()) +
                                    " applied to degree " + std::to_string(deg));
    Rational acc;
    BigInt fact = 1;
    for (std::size_t n = 0; n <= deg; ++n) {
        if (n > 0)
            fact *= n;
        if (!p.coeff(n).is_zero())
            acc += p.coeff(n) * Rational(fact) * f.coeff(n);
    }
    return acc;
}

Polynomial apply_operator(const TruncatedSeries& f, const Polynomial& p) {
    if (p.is_zero())
        return Polynomial();
    std::size_t deg = static_cast<std::size_t>(p.degree());
    if (deg > f.precision())
        throw InsufficientPrecision("operator stored to t^" + std::to_string(f.precision()) +
                                    " applied to degree " + std::to_string(deg));
    // t^k acts as the k-th derivative; terms beyond deg p annihilate p.
    Polynomial acc;
    Polynomial der = p;
    for (std::size_t k = 0; k <= deg; ++k) {
        if (!f.coeff(k).is_zero())
            acc += f.coeff(k) * der;
        der = der.derivative();
    }
    return acc;
}

std::vector<Polynomial> appell_sequence(const TruncatedSeries& g, std::size_t n_max) {
    if (n_max > g.precision())
        throw InsufficientPrecision("Appell sequence to degree " + std::to_string(n_max) +
                                    " needs series precision at least that");
    TruncatedSeries ginv = g.invert();
    std::vector<Polynomial> S;
    S.reserve(n_max + 1);
    // S_n = sum_k c_k(1/g) n!/(n-k)! x^{n-k}
    for (std::size_t n = 0; n <= n_max; ++n) {
        std::vector<Rational> coeffs(n + 1);
        Rational falling(1); // n! / j! for j = n down
        for (std::size_t j = n + 1; j-- > 0;) {
            coeffs[j] = ginv.coeff(n - j) * falling;
            if (j > 0)
                falling *= Rational(static_cast<long long>(j));
        }
        S.emplace_back(std::move(coeffs));
    }
    return S;
}

std::vector<Polynomial> sheffer_sequence(const ShefferPair& pair, std::size_t n_max) {
    std::size_t prec = pair.precision();
    if (n_max > prec)
        throw InsufficientPrecision("Sheffer sequence to degree " + std::to_string(n_max) +
                                    " needs pair precision at least that");
    TruncatedSeries fbar = pair.f().truncated(prec).comp_inverse();
    TruncatedSeries a = pair.g().truncated(prec).compose(fbar).invert();

    // Coefficients of e^{x fbar(t)} as polynomials in x: slot k collects
    // (fbar^j)_k x^j / j! over j <= k (fbar has order 1).
    std::vector<Polynomial> expanded(prec + 1);
    TruncatedSeries power = TruncatedSeries::one(prec);
    Rational inv_fact(1);
    for (std::size_t j = 0; j <= prec; ++j) {
        if (j > 0) {
            power = power * fbar;
            inv_fact /= Rational(static_cast<long long>(j));
        }
        for (std::size_t k = j; k <= prec; ++k) {
            if (!power.coeff(k).is_zero())
                expanded[k] += Polynomial::monomial(j, power.coeff(k) * inv_fact);
        }
    }

    std::vector<Polynomial> S;
    S.reserve(n_max + 1);
    BigInt fact = 1;
    for (std::size_t n = 0; n <= n_max; ++n) {
        if (n > 0)
            fact *= n;
        Polynomial acc;
        for (std::size_t i = 0; i <= n; ++i) {
            if (!a.coeff(i).is_zero())
                acc += a.coeff(i) * expanded[n - i];
        }
        S.push_back(Rational(fact) * acc);
    }
    return S;
}

std::vector<std::vector<Rational>> biorthogonality(const ShefferPair& pair,
                                                   const std::vector<Polynomial>& S,
                                                   std::size_t n_max, std::size_t k_max) {
    if (S.size() <= n_max)
        throw std::invalid_argument("sequence too short for requested matrix");
    std::vector<std::vector<Rational>> m(n_max + 1, std::vector<Rational>(k_max + 1));
    TruncatedSeries gfk = pair.g().truncated(pair.precision());
    for (std::size_t k = 0; k <= k_max; ++k) {
        for (std::size_t n = 0; n <= n_max; ++n)
            m[n][k] = apply_functional(gfk, S[n]);
        gfk = gfk * pair.f();
    }
    return m;
}

std::vector<Rational> expand_functional(const TruncatedSeries& h, const ShefferPair&,
                                        const std::vector<Polynomial>& S) {
    std::vector<Rational> lambda(S.size());
    Rational inv_fact(1);
    for (std::size_t k = 0; k < S.size(); ++k) {
        if (k > 0)
            inv_fact /= Rational(static_cast<long long>(k));
        lambda[k] = apply_functional(h, S[k]) * inv_fact;
    }
    return lambda;
}

std::vector<Rational> expand_polynomial(const Polynomial& p, const ShefferPair& pair,
                                        const std::vector<Polynomial>& S) {
    std::vector<Rational> mu(S.size());
    TruncatedSeries gfk = pair.g().truncated(pair.precision());
    Rational inv_fact(1);
    for (std::size_t k = 0; k < S.size(); ++k) {
        if (k > 0)
            inv_fact /= Rational(static_cast<long long>(k));
        mu[k] = apply_functional(gfk, p) * inv_fact;
        gfk = gfk * pair.f();
    }
    return mu;
}

bool sheffer_identity_check(const ShefferPair& pair, const std::vector<Polynomial>& S,
                            std::size_t n, const Rational& x0, const Rational& y0) {
    if (S.size() <= n)
        throw std::invalid_argument("sequence too short for requested degree");
    std::vector<Polynomial> assoc =
        sheffer_sequence(ShefferPair(TruncatedSeries::one(pair.f().precision()), pair.f()), n);
    Rational lhs = S[n].evaluate(x0 + y0);
    Rational rhs;
    for (std::size_t k = 0; k <= n; ++k)
        rhs += Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
               assoc[k].evaluate(y0) * S[n - k].evaluate(x0);
    return lhs == rhs;
}

namespace {

// Sum over compositions (i_j, ..., i_m) of `remaining`, carrying the
// partial multinomial weight.
Rational multinomial_rec(const std::vector<TruncatedSeries>& fs, std::size_t j,
                         unsigned remaining, const Rational& weight) {
    if (j + 1 == fs.size())
        return weight * fs[j].umbral_coeff(remaining);
    Rational acc;
    for (unsigned i = 0; i <= remaining; ++i) {
        Rational w = weight * Rational(binomial(remaining, i)) * fs[j].umbral_coeff(i);
        if (!w.is_zero())
            acc += multinomial_rec(fs, j + 1, remaining - i, w);
    }
    return acc;
}

} // namespace

Rational multinomial_action(const std::vector<TruncatedSeries>& fs, std::size_t n) {
    if (fs.empty())
        throw std::invalid_argument("multinomial action needs at least one factor");
    for (const TruncatedSeries& f : fs)
        if (f.precision() < n)
            throw InsufficientPrecision("every factor needs precision at least n");
    return multinomial_rec(fs, 0, static_cast<unsigned>(n), Rational(1));
}

} // namespace qumbral
