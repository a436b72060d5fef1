#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qumbral/rational.hpp"

namespace qumbral {

/// Formal power series c_0 + c_1 t + ... + c_N t^N with explicit
/// precision N. Coefficients are stored in ordinary form; the
/// divided-power coefficient a_k = k! * c_k is available on demand.
///
/// Precision is a hard attribute: every mixed-precision operation
/// truncates to the minimum of the operand precisions and never
/// extrapolates.
class TruncatedSeries {
public:
    /// Zero series at the given precision.
    explicit TruncatedSeries(std::size_t precision)
        : coeffs_(precision + 1) {}

    /// Takes c_0..c_N; precision is one less than the coefficient count.
    explicit TruncatedSeries(std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, std::size_t precision);
    static TruncatedSeries one(std::size_t precision) { return constant(Rational(1), precision); }
    /// c * t^k.
    static TruncatedSeries monomial(std::size_t k, const Rational& c, std::size_t precision);
    /// The identity series t.
    static TruncatedSeries identity(std::size_t precision) { return monomial(1, Rational(1), precision); }
    /// e^{yt}: c_k = y^k / k!.
    static TruncatedSeries exp(const Rational& y, std::size_t precision);

    std::size_t precision() const { return coeffs_.size() - 1; }
    const Rational& coeff(std::size_t k) const;
    /// a_k = k! * c_k, the coefficient in the t^k/k! basis.
    Rational umbral_coeff(std::size_t k) const;

    /// Index of the first nonzero coefficient, or nullopt when every
    /// stored coefficient vanishes (zero to this precision).
    std::optional<std::size_t> order() const;

    bool is_zero() const { return !order().has_value(); }

    /// Copy truncated to a lower (or equal) precision.
    TruncatedSeries truncated(std::size_t precision) const;

    friend TruncatedSeries operator-(const TruncatedSeries& f);
    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const Rational& s, const TruncatedSeries& f);
    friend TruncatedSeries operator*(const TruncatedSeries& f, const Rational& s) { return s * f; }

    TruncatedSeries& operator+=(const TruncatedSeries& b) { *this = *this + b; return *this; }
    TruncatedSeries& operator-=(const TruncatedSeries& b) { *this = *this - b; return *this; }
    TruncatedSeries& operator*=(const TruncatedSeries& b) { *this = *this * b; return *this; }

    /// Exact comparison: same precision and same coefficients.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Coefficientwise agreement up to the shared (minimum) precision.
    bool agrees_with(const TruncatedSeries& other) const;

    /// Multiplicative inverse; throws NotInvertible when c_0 = 0.
    TruncatedSeries invert() const;

    /// f(g(t)) truncated at the minimum precision; throws
    /// CompositionDomain unless g has zero constant term.
    TruncatedSeries compose(const TruncatedSeries& g) const;

    /// Compositional inverse of a delta series (order exactly 1);
    /// throws NotDelta otherwise.
    TruncatedSeries comp_inverse() const;

    /// d/dt; the result has precision N-1 (N stays 0 for constants).
    TruncatedSeries derivative() const;

    /// f^e by repeated squaring; precision unchanged.
    TruncatedSeries pow(unsigned e) const;

private:
    std::vector<Rational> coeffs_; // size = precision + 1
};

} // namespace qumbral
