#include <doctest.h>

#include "qumbral/series.hpp"
#include "support.hpp"

using namespace qumbral;

namespace {

TruncatedSeries from(std::vector<long long> ints) {
    std::vector<Rational> coeffs;
    coeffs.reserve(ints.size());
    for (long long v : ints)
        coeffs.emplace_back(v);
    return TruncatedSeries(std::move(coeffs));
}

} // namespace

TEST_CASE("ring operations truncate to the minimum precision") {
    TruncatedSeries a = from({1, 1});            // 1 + t
    TruncatedSeries b = from({1, -1, 0});        // 1 - t at precision 2
    TruncatedSeries prod = a * b;
    CHECK(prod.precision() == 1);
    CHECK(prod.coeff(0) == Rational(1));
    CHECK(prod.coeff(1) == Rational(0));

    TruncatedSeries wide = from({1, 1, 0}) * from({1, -1, 0});
    CHECK(wide.coeff(2) == Rational(-1)); // (1+t)(1-t) = 1 - t^2

    auto gen = testing::rng(7);
    TruncatedSeries f = testing::random_series(gen, 6);
    CHECK(f + TruncatedSeries(6) == f);

    TruncatedSeries t = TruncatedSeries::identity(2);
    CHECK((t * t).coeff(2) == Rational(1));
}

TEST_CASE("multiplication is commutative and associative on random samples") {
    auto gen = testing::rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries f = testing::random_series(gen, 6);
        TruncatedSeries g = testing::random_series(gen, 6);
        TruncatedSeries h = testing::random_series(gen, 6);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
    }
}

TEST_CASE("order of a series") {
    CHECK(from({0, 0, 1, 1}).order() == 2);
    CHECK(from({5}).order() == 0);
    CHECK_FALSE(TruncatedSeries(4).order().has_value());
}

TEST_CASE("order behaves like a valuation") {
    auto gen = testing::rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        TruncatedSeries f = testing::random_series(gen, 8);
        TruncatedSeries g = testing::random_series(gen, 8);
        auto of = f.order();
        auto og = g.order();
        if (of && og && *of + *og <= 8)
            CHECK(*(f * g).order() == *of + *og);
        auto osum = (f + g).order();
        if (of && og && osum)
            CHECK(*osum >= std::min(*of, *og));
    }
}

TEST_CASE("multiplicative inverse") {
    TruncatedSeries geom = from({1, -1, 0, 0, 0}).invert(); // 1/(1-t)
    for (std::size_t k = 0; k <= 4; ++k)
        CHECK(geom.coeff(k) == Rational(1));

    CHECK(TruncatedSeries::constant(Rational(2), 3).invert() ==
          TruncatedSeries::constant(Rational(1, 2), 3));

    CHECK_THROWS_AS(from({0, 1}).invert(), NotInvertible);

    auto gen = testing::rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries f = testing::random_invertible_series(gen, 8);
        CHECK(f.invert().invert() == f);
        CHECK(f * f.invert() == TruncatedSeries::one(8));
    }
}

TEST_CASE("composition") {
    TruncatedSeries f = from({1, 1, 0});
    TruncatedSeries g = from({0, 0, 1});
    TruncatedSeries fg = f.compose(g);
    CHECK(fg.coeff(0) == Rational(1));
    CHECK(fg.coeff(1) == Rational(0));
    CHECK(fg.coeff(2) == Rational(1)); // 1 + t^2

    auto gen = testing::rng(14);
    TruncatedSeries any = testing::random_series(gen, 6);
    CHECK(any.compose(TruncatedSeries::identity(6)) == any);

    // e^{t + t^2} starts 1 + t + (3/2) t^2
    TruncatedSeries expanded = TruncatedSeries::exp(Rational(1), 4).compose(from({0, 1, 1, 0, 0}));
    CHECK(expanded.coeff(0) == Rational(1));
    CHECK(expanded.coeff(1) == Rational(1));
    CHECK(expanded.coeff(2) == Rational(3, 2));

    CHECK_THROWS_AS(any.compose(from({1, 1})), CompositionDomain);
}

TEST_CASE("compositional inverse") {
    CHECK(TruncatedSeries::identity(5).comp_inverse() == TruncatedSeries::identity(5));
    CHECK(from({0, 2, 0}).comp_inverse() == TruncatedSeries(std::vector<Rational>{
        Rational(0), Rational(1, 2), Rational(0)}));

    // t + t^2 reverts to t - t^2 + 2t^3 - 5t^4 (signed Catalan numbers)
    TruncatedSeries rev = from({0, 1, 1, 0, 0}).comp_inverse();
    CHECK(rev.coeff(1) == Rational(1));
    CHECK(rev.coeff(2) == Rational(-1));
    CHECK(rev.coeff(3) == Rational(2));
    CHECK(rev.coeff(4) == Rational(-5));

    CHECK_THROWS_AS(from({1, 1}).comp_inverse(), NotDelta);
    CHECK_THROWS_AS(from({0, 0, 1}).comp_inverse(), NotDelta);
    CHECK_THROWS_AS(TruncatedSeries(4).comp_inverse(), NotDelta);

    auto gen = testing::rng(15);
    for (int trial = 0; trial < 15; ++trial) {
        TruncatedSeries f = testing::random_delta_series(gen, 8);
        TruncatedSeries fbar = f.comp_inverse();
        CHECK(fbar.compose(f) == TruncatedSeries::identity(8));
        CHECK(f.compose(fbar) == TruncatedSeries::identity(8));
    }
}

TEST_CASE("derivative") {
    TruncatedSeries cubed = TruncatedSeries::monomial(3, Rational(1), 4);
    TruncatedSeries d = cubed.derivative();
    CHECK(d.precision() == 3);
    CHECK(d.coeff(2) == Rational(3));

    CHECK(TruncatedSeries::constant(Rational(5), 3).derivative().is_zero());
    CHECK(TruncatedSeries::constant(Rational(5), 0).derivative().is_zero());

    Rational y(2, 3);
    TruncatedSeries e = TruncatedSeries::exp(y, 8);
    CHECK(e.derivative().agrees_with(y * e));
}

TEST_CASE("exponential series coefficients") {
    CHECK(TruncatedSeries::exp(Rational(0), 5) == TruncatedSeries::one(5));
    CHECK(TruncatedSeries::exp(Rational(1), 5).coeff(3) == Rational(1, 6));
    CHECK(TruncatedSeries::exp(Rational(2), 5).coeff(2) == Rational(2));
}

TEST_CASE("ordinary and divided-power coefficients") {
    TruncatedSeries f = from({3, 1, 5});
    CHECK(f.umbral_coeff(0) == Rational(3));
    CHECK(f.umbral_coeff(1) == Rational(1));
    CHECK(f.umbral_coeff(2) == Rational(10));
}

TEST_CASE("series powers") {
    TruncatedSeries f = from({1, 1, 0, 0});
    CHECK(f.pow(2) == f * f);
    CHECK(f.pow(3) == f * f * f);
    CHECK(f.pow(0) == TruncatedSeries::one(3));
}
