#pragma once

// Deterministic generators for the property-style tests.

#include <random>
#include <vector>

#include "qumbral/numbers.hpp"
#include "qumbral/polynomial.hpp"
#include "qumbral/rational.hpp"
#include "qumbral/series.hpp"

namespace qumbral::testing {

inline std::mt19937 rng(unsigned seed) { return std::mt19937(seed); }

inline Rational random_rational(std::mt19937& gen, int num_span = 9, int den_span = 6) {
    std::uniform_int_distribution<int> num(-num_span, num_span);
    std::uniform_int_distribution<int> den(1, den_span);
    return Rational(num(gen), den(gen));
}

inline Rational random_nonzero_rational(std::mt19937& gen, int num_span = 9, int den_span = 6) {
    for (;;) {
        Rational r = random_rational(gen, num_span, den_span);
        if (!r.is_zero())
            return r;
    }
}

inline Polynomial random_polynomial(std::mt19937& gen, int max_degree = 8) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    int d = deg(gen);
    std::vector<Rational> coeffs(d + 1);
    for (auto& c : coeffs)
        c = random_rational(gen);
    return Polynomial(std::move(coeffs));
}

inline TruncatedSeries random_series(std::mt19937& gen, std::size_t precision) {
    std::vector<Rational> coeffs(precision + 1);
    for (auto& c : coeffs)
        c = random_rational(gen);
    return TruncatedSeries(std::move(coeffs));
}

inline TruncatedSeries random_invertible_series(std::mt19937& gen, std::size_t precision) {
    std::vector<Rational> coeffs(precision + 1);
    coeffs[0] = random_nonzero_rational(gen);
    for (std::size_t k = 1; k <= precision; ++k)
        coeffs[k] = random_rational(gen);
    return TruncatedSeries(std::move(coeffs));
}

inline TruncatedSeries random_delta_series(std::mt19937& gen, std::size_t precision) {
    std::vector<Rational> coeffs(precision + 1);
    coeffs[1] = random_nonzero_rational(gen);
    for (std::size_t k = 2; k <= precision; ++k)
        coeffs[k] = random_rational(gen);
    return TruncatedSeries(std::move(coeffs));
}

inline QWeight random_weight(std::mt19937& gen) {
    for (;;) {
        Rational q = random_rational(gen, 5, 4);
        Rational zeta = random_rational(gen, 5, 4);
        if (q == Rational(-1) || (Rational(1) + q * zeta).is_zero())
            continue;
        return QWeight(q, zeta);
    }
}

} // namespace qumbral::testing
