#pragma once

#include <vector>

#include "qumbral/polynomial.hpp"
#include "qumbral/series.hpp"

namespace qumbral {

/// A pair (g, f) with g invertible (order 0) and f delta (order 1),
/// defining a Sheffer sequence. Orders are checked at construction.
class ShefferPair {
public:
    ShefferPair(TruncatedSeries g, TruncatedSeries f);

    const TruncatedSeries& g() const { return g_; }
    const TruncatedSeries& f() const { return f_; }
    /// Shared working precision of the pair.
    std::size_t precision() const;

private:
    TruncatedSeries g_;
    TruncatedSeries f_;
};

/// <f(t) | p(x)> = sum_n [x^n]p * n! * c_n(f). Throws
/// InsufficientPrecision when deg p exceeds the precision of f.
Rational apply_functional(const TruncatedSeries& f, const Polynomial& p);

/// f(t) acting as an operator: sum_k c_k(f) p^(k)(x). Requires the
/// precision of f to cover deg p.
Polynomial apply_operator(const TruncatedSeries& f, const Polynomial& p);

/// S_n = g(t)^{-1} x^n for n = 0..n_max: the Appell sequence of g.
/// Each S_n has degree exactly n with leading coefficient 1/c_0(g).
std::vector<Polynomial> appell_sequence(const TruncatedSeries& g, std::size_t n_max);

/// The Sheffer sequence of (g, f), built by expanding the bivariate
/// generating function A(t) e^{x fbar(t)} with fbar the compositional
/// inverse of f and A = 1/g(fbar).
std::vector<Polynomial> sheffer_sequence(const ShefferPair& pair, std::size_t n_max);

/// Entry (n, k) = <g f^k | S_n>; equals n! on the diagonal and 0 off it
/// when S is the Sheffer sequence of the pair.
std::vector<std::vector<Rational>> biorthogonality(const ShefferPair& pair,
                                                   const std::vector<Polynomial>& S,
                                                   std::size_t n_max, std::size_t k_max);

/// Coefficients lambda_k = <h | S_k>/k! of h in the basis {g f^k}.
std::vector<Rational> expand_functional(const TruncatedSeries& h, const ShefferPair& pair,
                                        const std::vector<Polynomial>& S);

/// Coefficients mu_k = <g f^k | p>/k! of p in the basis {S_k}.
std::vector<Rational> expand_polynomial(const Polynomial& p, const ShefferPair& pair,
                                        const std::vector<Polynomial>& S);

/// Verifies S_n(x0 + y0) = sum_k C(n,k) P_k(y0) S_{n-k}(x0), where P is
/// the associated sequence of f.
bool sheffer_identity_check(const ShefferPair& pair, const std::vector<Polynomial>& S,
                            std::size_t n, const Rational& x0, const Rational& y0);

/// <f_1 ... f_m | x^n> by enumerating all compositions i_1+...+i_m = n
/// with multinomial weights. Every factor needs precision >= n.
Rational multinomial_action(const std::vector<TruncatedSeries>& fs, std::size_t n);

} // namespace qumbral
