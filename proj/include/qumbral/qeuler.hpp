#pragma once

#include <cstddef>
#include <vector>

#include "qumbral/numbers.hpp"
#include "qumbral/polynomial.hpp"
#include "qumbral/series.hpp"
#include "qumbral/umbral.hpp"

namespace qumbral {

/// Weight plus working precision, with the cached generating series
/// g(t) = (q zeta e^t + 1)/[2]_q whose Appell sequence is the weighted
/// q-Euler family.
class QEulerContext {
public:
    QEulerContext(QWeight weight, std::size_t precision);

    const QWeight& weight() const { return weight_; }
    std::size_t precision() const { return precision_; }
    const TruncatedSeries& g() const { return g_; }

private:
    QWeight weight_;
    std::size_t precision_;
    TruncatedSeries g_;
};

/// Numbers E_n = E_n(0) and polynomials E_n(x) for n = 0..n_max.
struct QEulerTable {
    std::vector<Rational> numbers;
    std::vector<Polynomial> polynomials;
};

/// Appell construction of the weighted q-Euler family. Each polynomial
/// has degree exactly n with leading coefficient [2]_q/(1 + q zeta).
QEulerTable qeuler_polynomials(const QEulerContext& ctx, std::size_t n_max);

/// One recurrence step E_{n+1} = (x - g'/g) E_n.
Polynomial theorem1_step(const QEulerContext& ctx, const Polynomial& e_n);

/// Exact polynomial identity zeta q E_n(x+1) + E_n(x) = [2]_q x^n.
bool functional_equation_check(const QEulerContext& ctx, std::size_t n);

/// sum_k C(n,k) E_{n-k}(y) x^k; equals E_n shifted by y.
Polynomial addition_formula(const QEulerContext& ctx, std::size_t n, const Rational& y);

/// Multiplication theorem at odd d: compares E_n(d x0) against
/// d^n/[d]_{-q} sum_j (-1)^j (zeta q)^j E'_n(x0 + j/d) where E' is
/// built from the weight (q^d, zeta^d).
bool distribution_check(const QEulerContext& ctx, std::size_t n, unsigned d, const Rational& x0);

/// Argument scaling: E_n(a x) = a^n [g(t)/g(t/a)] E_n(x), exactly.
bool scaling_check(const QEulerContext& ctx, std::size_t n, const Rational& alpha);

/// Order-k family: the Appell sequence of g^k.
QEulerTable order_k_table(const QEulerContext& ctx, unsigned k, std::size_t n_max);

/// sum over i_1+...+i_k = n of multinomial * E_{i_1} ... E_{i_k};
/// equals the order-k number of the same degree.
Rational order_k_convolution(const QEulerContext& ctx, unsigned k, std::size_t n);

/// Exact partial sum [2]_q sum_{m=0}^{M} (-1)^m (q zeta)^m (m+x0)^{-s}.
/// Throws PoleAtNonpositive if some m + x0 vanishes.
Rational qzeta_partial(const QEulerContext& ctx, long long s, const Rational& x0, std::size_t terms);

} // namespace qumbral
