#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "holorec/series.hpp"
#include "reference_sequences.hpp"

using namespace holorec;
using namespace holorec::testref;

namespace {

Poly poly(std::initializer_list<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return Poly(std::move(c));
}

TruncatedSeries poly_series(const Poly& p, int order) {
    return series_from_poly(p, order);
}

} // namespace

TEST_CASE("series_pow: central binomial coefficients") {
    TruncatedSeries g = series_pow(poly_series(poly({1, -4}), 10), Rat(-1, 2));
    for (int n = 0; n <= 10; ++n) CHECK(g.at(n) == Rat(binom(2 * n, n)));
}

TEST_CASE("series_pow: exponent zero is the constant one") {
    TruncatedSeries g = series_pow(poly_series(poly({1, 5, -3}), 6), Rat(0));
    CHECK(g.at(0) == 1);
    for (int n = 1; n <= 6; ++n) CHECK(g.at(n) == 0);
}

TEST_CASE("series_pow: central trinomial coefficients") {
    TruncatedSeries g = series_pow(poly_series(poly({1, -2, -3}), 12), Rat(-1, 2));
    for (int n = 0; n <= 12; ++n) CHECK(g.at(n) == Rat(central_trinomial(n)));
}

TEST_CASE("series_pow: central Delannoy numbers") {
    TruncatedSeries g = series_pow(poly_series(poly({1, -6, 1}), 10), Rat(-1, 2));
    for (int n = 0; n <= 10; ++n) CHECK(g.at(n) == Rat(central_delannoy(n)));
}

TEST_CASE("series_pow requires a unit constant term") {
    CHECK_THROWS_AS(series_pow(poly_series(poly({2, 1}), 4), Rat(1, 2)), Error);
}

TEST_CASE("series_exp basics") {
    TruncatedSeries zero = poly_series(Poly(), 5);
    TruncatedSeries one = series_exp(zero);
    CHECK(one.at(0) == 1);
    for (int n = 1; n <= 5; ++n) CHECK(one.at(n) == 0);

    TruncatedSeries e = series_exp(poly_series(poly({0, 1}), 6));
    Rat fact(1);
    for (int n = 0; n <= 6; ++n) {
        if (n > 0) fact /= Rat(n);
        CHECK(e.at(n) == fact);
    }
    CHECK_THROWS_AS(series_exp(poly_series(poly({1, 1}), 4)), Error);
}

TEST_CASE("series_exp: exp(x/(1-x)) against the Lah-number reference") {
    int order = 10;
    TruncatedSeries arg = series_div(poly_series(poly({0, 1}), order),
                                     poly_series(poly({1, -1}), order));
    TruncatedSeries g = series_exp(arg);
    Rat fact(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) fact *= Rat(n);
        CHECK(g.at(n) * fact == Rat(ordered_set_partitions(n)));
    }
}

TEST_CASE("series_log basics") {
    TruncatedSeries logone = series_log(poly_series(Poly(1), 5));
    CHECK(logone.is_zero());

    TruncatedSeries mercator = series_log(poly_series(poly({1, 1}), 8));
    CHECK(mercator.at(0) == 0);
    for (int n = 1; n <= 8; ++n)
        CHECK(mercator.at(n) == Rat((n % 2 == 1) ? 1 : -1, n));

    TruncatedSeries harmonic =
        series_log(series_div(poly_series(Poly(1), 8), poly_series(poly({1, -1}), 8)));
    for (int n = 1; n <= 8; ++n) CHECK(harmonic.at(n) == Rat(1, n));
    CHECK_THROWS_AS(series_log(poly_series(poly({2}), 4)), Error);
}

TEST_CASE("pow/pow-inverse and exp/log compose to the identity") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coeff(-9, 9), deg(1, 4);
    for (int i = 0; i < 10; ++i) {
        std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
        c[0] = 1;
        for (std::size_t k = 1; k < c.size(); ++k) c[k] = Rat(coeff(rng));
        TruncatedSeries a = poly_series(Poly(c), 50);
        Rat alpha(1 + std::abs(coeff(rng)), 1 + std::abs(coeff(rng)) % 5);
        alpha.canonicalize();
        TruncatedSeries prod =
            series_mul(series_pow(a, alpha), series_pow(a, -alpha));
        CHECK(prod.at(0) == 1);
        for (int n = 1; n <= 50; ++n) CHECK(prod.at(n) == 0);

        TruncatedSeries back = series_exp(series_log(a));
        for (int n = 0; n <= 50; ++n) CHECK(back.at(n) == a.at(n));
    }
}

TEST_CASE("series division and derivative") {
    TruncatedSeries geom = series_div(poly_series(Poly(1), 6), poly_series(poly({1, -1}), 6));
    for (int n = 0; n <= 6; ++n) CHECK(geom.at(n) == 1);
    CHECK_THROWS_AS(series_div(poly_series(Poly(1), 4), poly_series(poly({0, 1}), 4)), Error);

    TruncatedSeries d = series_derivative(geom);
    for (int n = 0; n <= 5; ++n) CHECK(d.at(n) == n + 1);
}
