#include <doctest.h>

#include "qumbral/padic_lab.hpp"
#include "qumbral/qeuler.hpp"
#include "support.hpp"

using namespace qumbral;

namespace {

const QWeight kPadicWeight{Rational(4), Rational(7)}; // q = 1 + p, zeta = 1 + 2p for p = 3

// Telescoping closed form of the defect: an independent route that never
// touches the summation loop.
Rational lemma1_closed_form(const PAdicExperiment& exp, unsigned m) {
    BigInt pm = 1;
    for (unsigned i = 0; i < m; ++i)
        pm *= exp.p;
    Rational qz_pow(1);
    {
        // (q zeta)^{p^m} by binary exponentiation over BigInt exponent
        Rational base = exp.weight.qzeta();
        BigInt e = pm;
        while (e > 0) {
            if (boost::multiprecision::bit_test(e, 0))
                qz_pow *= base;
            base *= base;
            e >>= 1;
        }
    }
    const Polynomial& f = exp.integrand;
    Rational f_end = f.evaluate(Rational(pm));
    return (f.evaluate(Rational(0)) + qz_pow * f_end) / level_normalizer(exp.weight.q(), exp.p, m) -
           exp.weight.two_bracket() * f.evaluate(Rational(0));
}

} // namespace

TEST_CASE("experiment validation") {
    std::vector<unsigned> levels{1, 2, 3};
    Polynomial f = Polynomial::monomial(1);
    CHECK_THROWS_AS(PAdicExperiment(4, kPadicWeight, levels, f), NotPrime);
    CHECK_THROWS_AS(PAdicExperiment(2, kPadicWeight, levels, f), std::invalid_argument);
    // weight must be p-adically close to 1
    CHECK_THROWS_AS(PAdicExperiment(3, QWeight(Rational(2), Rational(7)), levels, f), InvalidWeight);
    CHECK_THROWS_AS(PAdicExperiment(3, QWeight(Rational(4), Rational(3)), levels, f), InvalidWeight);
    // q = zeta = 1 qualifies: the valuation of 0 is infinite
    CHECK_NOTHROW(PAdicExperiment(3, QWeight(Rational(1), Rational(1)), levels, f));
    CHECK_THROWS_AS(PAdicExperiment(3, kPadicWeight, {}, f), std::invalid_argument);
    CHECK_THROWS_AS(PAdicExperiment(3, kPadicWeight, {0, 1}, f), std::invalid_argument);
    CHECK_THROWS_AS(PAdicExperiment(3, kPadicWeight, {1, 20}, f), BudgetExceeded);
    CHECK_THROWS_AS(PAdicExperiment(3, kPadicWeight, {1, 9}, f, 100), BudgetExceeded);
}

TEST_CASE("level normalizer") {
    // [3]_{-q} at q = 1 is (1 + 1)/(1 + 1) = 1
    CHECK(level_normalizer(Rational(1), 3, 1) == Rational(1));
    CHECK(level_normalizer(Rational(4), 3, 1) == Rational(13)); // (1 + 64)/5
    CHECK(level_normalizer(Rational(4), 3, 2) == q_bracket_neg(9, Rational(4)));
}

TEST_CASE("constant integrand matches the geometric closed form") {
    PAdicExperiment exp(3, kPadicWeight, {1, 2, 3, 4, 5}, Polynomial::constant(Rational(1)));
    Rational target = exp.weight.two_bracket() / (Rational(1) + exp.weight.qzeta());
    Valuation prev = Valuation::of(-1000);
    for (unsigned m : exp.levels) {
        Rational s = fermionic_sum(exp, m, Rational(0));
        // geometric closed form (1 + (q zeta)^{p^m}) / ((1 + q zeta) [p^m]_{-q})
        Rational qz_pow(1);
        std::uint64_t reps = 1;
        for (unsigned i = 0; i < m; ++i)
            reps *= 3;
        for (std::uint64_t i = 0; i < reps; ++i)
            qz_pow *= exp.weight.qzeta();
        CHECK(s == (Rational(1) + qz_pow) / (Rational(1) + exp.weight.qzeta()) /
                       level_normalizer(exp.weight.q(), 3, m));
        Valuation v = padic_valuation(s - target, 3);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("classical three-term sum") {
    // q = zeta = 1, f = xi, p = 3, level 1: (0 - 1 + 2)/[3]_{-1} = 1
    PAdicExperiment exp(3, QWeight(Rational(1), Rational(1)), {1, 2, 3, 4, 5},
                        Polynomial::monomial(1));
    CHECK(fermionic_sum(exp, 1, Rational(0)) == Rational(1));

    // the classical first Euler number -1/2 is the p-adic target
    Valuation prev = Valuation::of(-1000);
    for (unsigned m : exp.levels) {
        Rational s = fermionic_sum(exp, m, Rational(0));
        Valuation v = padic_valuation(s - Rational(-1, 2), 3);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("shifted integrand targets the polynomial value") {
    PAdicExperiment exp(3, kPadicWeight, {1, 2, 3, 4}, Polynomial::monomial(2));
    QEulerContext ctx(kPadicWeight, 4);
    Rational x0(1, 2);
    Rational target = qeuler_polynomials(ctx, 2).polynomials[2].evaluate(x0);
    Valuation prev = Valuation::of(-1000);
    for (unsigned m : exp.levels) {
        Valuation v = padic_valuation(fermionic_sum(exp, m, x0) - target, 3);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("budget is enforced per evaluation") {
    PAdicExperiment exp(3, kPadicWeight, {1, 2}, Polynomial::monomial(1), 100);
    CHECK_NOTHROW(fermionic_sum(exp, 2, Rational(0)));
    CHECK_THROWS_AS(fermionic_sum(exp, 5, Rational(0)), BudgetExceeded);
    CHECK_THROWS_AS(iterated_fermionic_sum(exp, 3, 2, 1, Rational(0)), BudgetExceeded);
}

TEST_CASE("defect of the shift identity vanishes p-adically") {
    for (const Polynomial& f : {Polynomial::constant(Rational(1)), Polynomial::monomial(2),
                                Polynomial(std::vector<Rational>{Rational(1, 3), Rational(2)})}) {
        PAdicExperiment exp(3, kPadicWeight, {1, 2, 3, 4, 5, 6}, f);
        Valuation prev = Valuation::of(-1000);
        for (unsigned m : exp.levels) {
            Rational defect = lemma1_check(exp, m);
            CHECK(defect == lemma1_closed_form(exp, m));
            Valuation v = padic_valuation(defect, 3);
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("classical specialization of the shift identity") {
    // at q = zeta = 1 the defect is f(p^m) - f(0) exactly
    PAdicExperiment exp(3, QWeight(Rational(1), Rational(1)), {1, 2, 3}, Polynomial::monomial(2));
    CHECK(lemma1_check(exp, 1) == Rational(9));
    CHECK(lemma1_check(exp, 2) == Rational(81));
    PAdicExperiment constant(3, QWeight(Rational(1), Rational(1)), {1, 2},
                             Polynomial::constant(Rational(5)));
    CHECK(lemma1_check(constant, 2) == Rational(0));
}

TEST_CASE("convergence report rows") {
    PAdicExperiment exp(3, kPadicWeight, {1, 2, 3, 4, 5, 6}, Polynomial::monomial(0));
    auto rows = convergence_report(exp, 0, Rational(0));
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].first == exp.levels[i]);
        if (i > 0)
            CHECK(rows[i].second > rows[i - 1].second);
    }

    auto quadratic = convergence_report(exp, 2, Rational(0));
    for (std::size_t i = 1; i < quadratic.size(); ++i)
        CHECK(quadratic[i].second >= quadratic[i - 1].second);

    PAdicExperiment classical(3, QWeight(Rational(1), Rational(1)), {1, 2, 3, 4, 5},
                              Polynomial::monomial(1));
    auto linear = convergence_report(classical, 1, Rational(0));
    for (std::size_t i = 1; i < linear.size(); ++i)
        CHECK(linear[i].second > linear[i - 1].second);
}

TEST_CASE("level sums are Cauchy in valuation") {
    for (std::size_t n : {std::size_t(1), std::size_t(2)}) {
        PAdicExperiment exp(3, kPadicWeight, {1, 2, 3, 4, 5, 6}, Polynomial::monomial(n));
        std::vector<Rational> sums;
        for (unsigned m : exp.levels)
            sums.push_back(fermionic_sum(exp, m, Rational(0)));
        Valuation prev = padic_valuation(sums[1] - sums[0], 3);
        for (std::size_t i = 2; i < sums.size(); ++i) {
            Valuation step = padic_valuation(sums[i] - sums[i - 1], 3);
            CHECK(step >= prev);
            prev = step;
        }
    }
}

TEST_CASE("iterated sums") {
    PAdicExperiment exp(3, kPadicWeight, {1, 2, 3}, Polynomial::monomial(1));

    // a single fold is the plain sum
    for (unsigned m : exp.levels)
        CHECK(iterated_fermionic_sum(exp, 1, m, 1, Rational(0)) ==
              fermionic_sum(exp, m, Rational(0)));

    // a constant integrand factorizes the double sum exactly
    PAdicExperiment constant(3, kPadicWeight, {1, 2, 3}, Polynomial::constant(Rational(1)));
    for (unsigned m : constant.levels) {
        Rational single = fermionic_sum(constant, m, Rational(0));
        CHECK(iterated_fermionic_sum(constant, 2, m, 0, Rational(0)) == single * single);
    }

    // double sums converge to the order-2 numbers
    QEulerContext ctx(kPadicWeight, 4);
    for (std::size_t n : {std::size_t(0), std::size_t(1)}) {
        Rational target = order_k_table(ctx, 2, n).numbers[n];
        Valuation prev = Valuation::of(-1000);
        for (unsigned m : exp.levels) {
            Valuation v = padic_valuation(iterated_fermionic_sum(exp, 2, m, n, Rational(0)) - target, 3);
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("iterated sum matches direct tuple enumeration") {
    PAdicExperiment exp(3, kPadicWeight, {1, 2}, Polynomial::monomial(1));
    Rational minus_qz = -kPadicWeight.qzeta();
    Rational x0(1, 2);
    for (unsigned m : {1u, 2u}) {
        std::uint64_t terms = 1;
        for (unsigned i = 0; i < m; ++i)
            terms *= 3;
        Rational norm = level_normalizer(kPadicWeight.q(), 3, m);
        for (std::size_t n : {std::size_t(0), std::size_t(1), std::size_t(3)}) {
            Rational brute;
            for (std::uint64_t a = 0; a < terms; ++a)
                for (std::uint64_t b = 0; b < terms; ++b)
                    brute += pow(minus_qz, static_cast<long long>(a + b)) *
                             pow(x0 + Rational(a + b), static_cast<long long>(n));
            brute /= norm * norm;
            CHECK(brute == iterated_fermionic_sum(exp, 2, m, n, x0));
        }
    }
    // threefold at the smallest level
    Rational brute3;
    for (std::uint64_t a = 0; a < 3; ++a)
        for (std::uint64_t b = 0; b < 3; ++b)
            for (std::uint64_t c = 0; c < 3; ++c)
                brute3 += pow(minus_qz, static_cast<long long>(a + b + c)) *
                          pow(x0 + Rational(a + b + c), 2);
    brute3 /= pow(level_normalizer(kPadicWeight.q(), 3, 1), 3);
    CHECK(brute3 == iterated_fermionic_sum(exp, 3, 1, 2, x0));
}

TEST_CASE("regrouping a level into residue classes") {
    // The level-m sum at weight (q, zeta) equals the d-class regrouping at
    // weight (q^d, zeta^d) and level m-1, with d = p: an exact identity at
    // finite level.
    unsigned d = 3;
    QWeight powered = kPadicWeight.power(d);
    for (std::size_t n : {std::size_t(0), std::size_t(2), std::size_t(3)}) {
        PAdicExperiment base(3, kPadicWeight, {2, 3}, Polynomial::monomial(n));
        PAdicExperiment sub(3, powered, {1, 2}, Polynomial::monomial(n));
        for (Rational x : {Rational(0), Rational(1, 2)}) {
            for (unsigned m : {2u, 3u}) {
                Rational lhs = fermionic_sum(base, m, x);
                Rational acc;
                Rational w(1);
                for (unsigned j = 0; j < d; ++j) {
                    acc += w * fermionic_sum(sub, m - 1, (x + Rational(j)) / Rational(d));
                    w *= -kPadicWeight.qzeta();
                }
                Rational rhs = pow(Rational(d), static_cast<long long>(n)) /
                               q_bracket_neg(d, kPadicWeight.q()) * acc;
                CHECK(lhs == rhs);
            }
        }
    }
}
