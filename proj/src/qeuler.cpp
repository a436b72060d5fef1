#include "qumbral/qeuler.hpp"

#include <stdexcept>

#include "qumbral/errors.hpp"

namespace qumbral {

namespace {

TruncatedSeries weighted_g_series(const QWeight& w, std::size_t precision) {
    // g(t) = (q zeta e^t + 1)/[2]_q: g_0 = (1 + q zeta)/(1 + q) and
    // g_k = q zeta / ((1 + q) k!) for k >= 1.
    Rational qz = w.qzeta();
    Rational inv_two = Rational(1) / w.two_bracket();
    std::vector<Rational> coeffs(precision + 1);
    coeffs[0] = (Rational(1) + qz) * inv_two;
    Rational term = qz * inv_two;
    for (std::size_t k = 1; k <= precision; ++k) {
        term /= Rational(static_cast<long long>(k));
        coeffs[k] = term;
    }
    return TruncatedSeries(std::move(coeffs));
}

} // namespace

QEulerContext::QEulerContext(QWeight weight, std::size_t precision)
    : weight_(std::move(weight)), precision_(precision), g_(weighted_g_series(weight_, precision)) {}

QEulerTable qeuler_polynomials(const QEulerContext& ctx, std::size_t n_max) {
    QEulerTable table;
    table.polynomials = appell_sequence(ctx.g(), n_max);
    table.numbers.reserve(n_max + 1);
    for (const Polynomial& p : table.polynomials)
        table.numbers.push_back(p.coeff(0));
    return table;
}

Polynomial theorem1_step(const QEulerContext& ctx, const Polynomial& e_n) {
    TruncatedSeries ratio = ctx.g().derivative() * ctx.g().invert();
    return Polynomial::monomial(1) * e_n - apply_operator(ratio, e_n);
}

bool functional_equation_check(const QEulerContext& ctx, std::size_t n) {
    QEulerTable table = qeuler_polynomials(ctx, n);
    const Polynomial& e_n = table.polynomials[n];
    Polynomial lhs = ctx.weight().qzeta() * e_n.shift(Rational(1)) + e_n;
    Polynomial rhs = Polynomial::monomial(n, ctx.weight().two_bracket());
    return lhs == rhs;
}

Polynomial addition_formula(const QEulerContext& ctx, std::size_t n, const Rational& y) {
    QEulerTable table = qeuler_polynomials(ctx, n);
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        coeffs[k] = Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(k))) *
                    table.polynomials[n - k].evaluate(y);
    return Polynomial(std::move(coeffs));
}

bool distribution_check(const QEulerContext& ctx, std::size_t n, unsigned d, const Rational& x0) {
    if (d == 0 || d % 2 == 0)
        throw std::invalid_argument("multiplication theorem needs odd d");
    QEulerContext power_ctx(ctx.weight().power(d), ctx.precision());
    QEulerTable base = qeuler_polynomials(ctx, n);
    QEulerTable powered = qeuler_polynomials(power_ctx, n);

    Rational ratio_d(static_cast<long long>(d));
    Rational lhs = base.polynomials[n].evaluate(ratio_d * x0);

    Rational acc;
    Rational sign_weight(1); // (-1)^j (zeta q)^j
    Rational minus_qz = -ctx.weight().qzeta();
    for (unsigned j = 0; j < d; ++j) {
        acc += sign_weight * powered.polynomials[n].evaluate(x0 + Rational(j, d));
        sign_weight *= minus_qz;
    }
    Rational rhs = pow(ratio_d, static_cast<long long>(n)) / q_bracket_neg(d, ctx.weight().q()) * acc;
    return lhs == rhs;
}

bool scaling_check(const QEulerContext& ctx, std::size_t n, const Rational& alpha) {
    if (alpha.is_zero())
        throw DivisionByZero("argument scaling needs alpha != 0");
    QEulerTable table = qeuler_polynomials(ctx, n);
    const Polynomial& e_n = table.polynomials[n];
    Polynomial lhs = e_n.scale_argument(alpha);

    // g(t/alpha): coefficient k picks up alpha^{-k}.
    std::size_t prec = ctx.precision();
    std::vector<Rational> scaled(prec + 1);
    Rational inv_alpha = Rational(1) / alpha;
    Rational factor(1);
    for (std::size_t k = 0; k <= prec; ++k) {
        scaled[k] = ctx.g().coeff(k) * factor;
        factor *= inv_alpha;
    }
    TruncatedSeries transfer = ctx.g() * TruncatedSeries(std::move(scaled)).invert();
    Polynomial rhs = pow(alpha, static_cast<long long>(n)) * apply_operator(transfer, e_n);
    return lhs == rhs;
}

QEulerTable order_k_table(const QEulerContext& ctx, unsigned k, std::size_t n_max) {
    if (k == 0)
        throw std::invalid_argument("order must be at least 1");
    QEulerTable table;
    table.polynomials = appell_sequence(ctx.g().pow(k), n_max);
    table.numbers.reserve(n_max + 1);
    for (const Polynomial& p : table.polynomials)
        table.numbers.push_back(p.coeff(0));
    return table;
}

namespace {

Rational convolution_rec(const std::vector<Rational>& numbers, unsigned parts,
                         unsigned remaining, const Rational& weight) {
    if (parts == 1)
        return weight * numbers[remaining];
    Rational acc;
    for (unsigned i = 0; i <= remaining; ++i) {
        Rational w = weight * Rational(binomial(remaining, i)) * numbers[i];
        if (!w.is_zero())
            acc += convolution_rec(numbers, parts - 1, remaining - i, w);
    }
    return acc;
}

} // namespace

Rational order_k_convolution(const QEulerContext& ctx, unsigned k, std::size_t n) {
    if (k == 0)
        throw std::invalid_argument("order must be at least 1");
    QEulerTable base = qeuler_polynomials(ctx, n);
    return convolution_rec(base.numbers, k, static_cast<unsigned>(n), Rational(1));
}

Rational qzeta_partial(const QEulerContext& ctx, long long s, const Rational& x0, std::size_t terms) {
    Rational acc;
    Rational weight(1); // (-1)^m (q zeta)^m
    Rational minus_qz = -ctx.weight().qzeta();
    for (std::size_t m = 0; m <= terms; ++m) {
        Rational base = x0 + Rational(static_cast<long long>(m));
        if (base.is_zero())
            throw PoleAtNonpositive("summand at m = " + std::to_string(m) + " hits a pole");
        acc += weight * pow(base, -s);
        weight *= minus_qz;
    }
    return ctx.weight().two_bracket() * acc;
}

} // namespace qumbral
