#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qumbral/numbers.hpp"
#include "qumbral/polynomial.hpp"

namespace qumbral {

/// A truncated-sum experiment for the extended fermionic p-adic
/// q-integral: level m evaluates
///   S_m = (1/[p^m]_{-q}) sum_{xi=0}^{p^m - 1} zeta^xi (-1)^xi q^xi f(x0 + xi)
/// in exact rational arithmetic. Convergence is certified by the growth
/// of v_p(S_m - target) across levels.
///
/// Constraints: p is an odd prime, v_p(q - 1) >= 1 and v_p(zeta - 1) >= 1
/// (the weight is p-adically close to 1; q = zeta = 1 qualifies), every
/// level is >= 1 and p^max(levels) stays within the term budget.
struct PAdicExperiment {
    static constexpr std::uint64_t kDefaultBudget = 1'000'000;

    PAdicExperiment(std::uint64_t p, QWeight weight, std::vector<unsigned> levels,
                    Polynomial integrand, std::uint64_t budget = kDefaultBudget);

    std::uint64_t p;
    QWeight weight;
    std::vector<unsigned> levels;
    Polynomial integrand;
    std::uint64_t budget;
};

/// [p^m]_{-q} = (1 + q^{p^m})/(1 + q) for odd p.
Rational level_normalizer(const Rational& q, std::uint64_t p, unsigned m);

/// The level-m truncated sum with integrand f(x0 + xi), f the stored
/// polynomial. Throws BudgetExceeded when p^m exceeds the term budget.
Rational fermionic_sum(const PAdicExperiment& exp, unsigned m, const Rational& x0);

/// Defect D_m = q zeta S_m(f(.+1)) + S_m(f) - [2]_q f(0); its valuation
/// grows without bound as the level increases.
Rational lemma1_check(const PAdicExperiment& exp, unsigned m);

/// For each configured level m: v_p(S_m - E_n(x0)) with integrand
/// (x0 + xi)^n and the closed-form weighted q-Euler target.
std::vector<std::pair<unsigned, Valuation>> convergence_report(const PAdicExperiment& exp,
                                                               std::size_t n, const Rational& x0);

/// Exact k-fold sum over xi_1..xi_k in [0, p^m) with product weights and
/// integrand (x0 + xi_1 + ... + xi_k)^n, normalized by [p^m]_{-q}^k.
/// Throws BudgetExceeded when p^{k m} exceeds the term budget.
Rational iterated_fermionic_sum(const PAdicExperiment& exp, unsigned k, unsigned m,
                                std::size_t n, const Rational& x0);

} // namespace qumbral
