#include "qumbral/padic_lab.hpp"

#include <algorithm>
#include <stdexcept>

#include "qumbral/errors.hpp"
#include "qumbral/qeuler.hpp"

namespace qumbral {

namespace {

BigInt pow_u64(std::uint64_t base, unsigned e) {
    BigInt r = 1;
    for (unsigned i = 0; i < e; ++i)
        r *= base;
    return r;
}

void check_budget(std::uint64_t p, unsigned total_exponent, std::uint64_t budget) {
    if (pow_u64(p, total_exponent) > budget)
        throw BudgetExceeded("p^" + std::to_string(total_exponent) + " summands exceed the budget of " +
                             std::to_string(budget));
}

// Level-m truncated sum with integrand f(x0 + xi).
Rational level_sum(const QWeight& w, std::uint64_t p, unsigned m, const Polynomial& f,
                   const Rational& x0) {
    std::uint64_t terms = static_cast<std::uint64_t>(pow_u64(p, m));
    Rational acc;
    Rational weight(1); // zeta^xi (-1)^xi q^xi = (-q zeta)^xi
    Rational minus_qz = -w.qzeta();
    for (std::uint64_t xi = 0; xi < terms; ++xi) {
        acc += weight * f.evaluate(x0 + Rational(static_cast<long long>(xi)));
        weight *= minus_qz;
    }
    return acc / level_normalizer(w.q(), p, m);
}

} // namespace

Rational level_normalizer(const Rational& q, std::uint64_t p, unsigned m) {
    // p^m is odd, so (-q)^{p^m} = -q^{p^m}.
    BigInt e = pow_u64(p, m);
    Rational qe(1);
    Rational base = q;
    BigInt n = e;
    while (n > 0) {
        if (boost::multiprecision::bit_test(n, 0))
            qe *= base;
        base *= base;
        n >>= 1;
    }
    return (Rational(1) + qe) / (Rational(1) + q);
}

PAdicExperiment::PAdicExperiment(std::uint64_t p_, QWeight weight_, std::vector<unsigned> levels_,
                                 Polynomial integrand_, std::uint64_t budget_)
    : p(p_), weight(std::move(weight_)), levels(std::move(levels_)),
      integrand(std::move(integrand_)), budget(budget_) {
    if (!is_prime(p))
        throw NotPrime("p = " + std::to_string(p) + " is not prime");
    if (p == 2)
        throw std::invalid_argument("the fermionic sum needs an odd prime");
    if (padic_valuation(weight.q() - Rational(1), p) < Valuation::of(1))
        throw InvalidWeight("q must satisfy v_p(q - 1) >= 1");
    if (padic_valuation(weight.zeta() - Rational(1), p) < Valuation::of(1))
        throw InvalidWeight("zeta must satisfy v_p(zeta - 1) >= 1");
    if (levels.empty())
        throw std::invalid_argument("experiment needs at least one level");
    for (unsigned m : levels)
        if (m < 1)
            throw std::invalid_argument("levels start at 1");
    check_budget(p, *std::max_element(levels.begin(), levels.end()), budget);
}

Rational fermionic_sum(const PAdicExperiment& exp, unsigned m, const Rational& x0) {
    check_budget(exp.p, m, exp.budget);
    return level_sum(exp.weight, exp.p, m, exp.integrand, x0);
}

Rational lemma1_check(const PAdicExperiment& exp, unsigned m) {
    check_budget(exp.p, m, exp.budget);
    Rational shifted = level_sum(exp.weight, exp.p, m, exp.integrand, Rational(1));
    Rational plain = level_sum(exp.weight, exp.p, m, exp.integrand, Rational(0));
    return exp.weight.qzeta() * shifted + plain -
           exp.weight.two_bracket() * exp.integrand.evaluate(Rational(0));
}

std::vector<std::pair<unsigned, Valuation>> convergence_report(const PAdicExperiment& exp,
                                                               std::size_t n, const Rational& x0) {
    QEulerContext ctx(exp.weight, n);
    Rational target = qeuler_polynomials(ctx, n).polynomials[n].evaluate(x0);
    Polynomial moment = Polynomial::monomial(n);
    std::vector<std::pair<unsigned, Valuation>> rows;
    rows.reserve(exp.levels.size());
    for (unsigned m : exp.levels) {
        check_budget(exp.p, m, exp.budget);
        Rational sum = level_sum(exp.weight, exp.p, m, moment, x0);
        rows.emplace_back(m, padic_valuation(sum - target, exp.p));
    }
    return rows;
}

Rational iterated_fermionic_sum(const PAdicExperiment& exp, unsigned k, unsigned m,
                                std::size_t n, const Rational& x0) {
    if (k == 0)
        throw std::invalid_argument("fold count must be at least 1");
    check_budget(exp.p, k * m, exp.budget);
    std::uint64_t terms = static_cast<std::uint64_t>(pow_u64(exp.p, m));

    // The product weight depends only on s = xi_1 + ... + xi_k, so the
    // k-fold sum collapses to sum_s N_k(s) (-q zeta)^s (x0 + s)^n where
    // N_k(s) counts compositions of s into k parts below p^m. The counts
    // come from k sliding-window convolutions of an all-ones vector.
    std::vector<BigInt> counts{1};
    for (unsigned fold = 0; fold < k; ++fold) {
        std::vector<BigInt> next(counts.size() + terms - 1);
        BigInt window = 0;
        for (std::size_t s = 0; s < next.size(); ++s) {
            if (s < counts.size())
                window += counts[s];
            if (s >= terms)
                window -= counts[s - terms];
            next[s] = window;
        }
        counts = std::move(next);
    }

    Rational acc;
    Rational weight(1);
    Rational minus_qz = -exp.weight.qzeta();
    for (std::size_t s = 0; s < counts.size(); ++s) {
        Rational base = x0 + Rational(static_cast<long long>(s));
        acc += Rational(counts[s]) * weight * pow(base, static_cast<long long>(n));
        weight *= minus_qz;
    }
    return acc / pow(level_normalizer(exp.weight.q(), exp.p, m), k);
}

} // namespace qumbral
