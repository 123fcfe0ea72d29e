#include <doctest.h>

#include "holorec/classify.hpp"
#include "holorec/oracle.hpp"
#include "reference_sequences.hpp"

using namespace holorec;
using namespace holorec::testref;

namespace {

Poly P(const std::string& s) {
    return parse_poly(s);
}

} // namespace

TEST_CASE("oracle: central Delannoy from the inverse root") {
    TruncatedSeries g = oracle_expand(InverseRoot{P("1-6*x+x^2"), Rat(2)}, 8);
    for (int n = 0; n <= 8; ++n) CHECK(g.at(n) == Rat(central_delannoy(n)));
}

TEST_CASE("oracle: log of rational") {
    TruncatedSeries g = oracle_expand(LogRational{Poly(1), P("1-x")}, 4);
    CHECK(g.at(0) == 0);
    for (int n = 1; n <= 4; ++n) CHECK(g.at(n) == Rat(1, n));
}

TEST_CASE("oracle: nested sqrt constant term") {
    TruncatedSeries g = oracle_expand(NestedSqrt{Poly(3), P("1-4*x"), Rat(2)}, 0);
    CHECK(g.at(0) == 2);
}

TEST_CASE("oracle: rational r scales through the constant term") {
    // p(0) = 6 is fine for r = 1: plain series division by p
    TruncatedSeries g =
        oracle_expand(ExpRationalTimesRoot{P("0-x"), Poly(1), P("6+18*x+9*x^2+x^3"), Rat(1)}, 5);
    CHECK(g.at(0) == Rat(1, 6));
}

TEST_CASE("oracle: rooted numerator with a vanishing denominator factor") {
    GFClass cls = RootedNumerator{P("1-2*x-3*x^2"), P("0-(1-x)"), P("1-2*x-7*x^2"), P("8*x^3"),
                                  Rat(2)};
    TruncatedSeries g = oracle_expand(cls, 7);
    std::vector<long> expected{0, 1, 2, 7, 20, 65, 206, 679};
    for (int n = 0; n <= 7; ++n) CHECK(g.at(n) == Rat(expected[static_cast<std::size_t>(n)]));
}

TEST_CASE("oracle: inverse root with r = 1 equals plain series division") {
    Poly p = P("1-5*x+2*x^2-x^3");
    TruncatedSeries a = oracle_expand(InverseRoot{p, Rat(1)}, 30);
    TruncatedSeries b = series_div(series_from_poly(Poly(1), 30), series_from_poly(p, 30));
    for (int n = 0; n <= 30; ++n) CHECK(a.at(n) == b.at(n));
}

TEST_CASE("oracle: hypergeometric") {
    // log(1+x) = x * 2F1(1,1;2;-x)
    Hypergeometric h;
    h.alphas = {Rat(1), Rat(1)};
    h.betas = {Rat(2)};
    h.t = 1;
    h.r = 1;
    h.c = Rat(-1);
    TruncatedSeries g = oracle_expand(h, 12);
    TruncatedSeries ref = series_log(series_from_poly(P("1+x"), 12));
    for (int n = 0; n <= 12; ++n) CHECK(g.at(n) == ref.at(n));

    // (1-x)^alpha = 1F0(-alpha;;x)
    Rat alpha(3, 2);
    Hypergeometric f10;
    f10.alphas = {-alpha};
    f10.betas = {};
    f10.t = 0;
    f10.r = 1;
    f10.c = Rat(1);
    TruncatedSeries lhs = oracle_expand(f10, 20);
    TruncatedSeries rhs = series_pow(series_from_poly(P("1-x"), 20), alpha);
    for (int n = 0; n <= 20; ++n) CHECK(lhs.at(n) == rhs.at(n));

    // stride 2, offset 1: arcsin-like support pattern gets exact zeros
    Hypergeometric arc;
    arc.alphas = {Rat(1, 2), Rat(1, 2)};
    arc.betas = {Rat(3, 2)};
    arc.t = 1;
    arc.r = 2;
    arc.c = Rat(1);
    TruncatedSeries s = oracle_expand(arc, 9);
    CHECK(s.at(0) == 0);
    CHECK(s.at(1) == 1);
    CHECK(s.at(2) == 0);
    CHECK(s.at(3) == Rat(1, 6));
    CHECK(s.at(4) == 0);
    CHECK(s.at(5) == Rat(3, 40));
    CHECK(s.at(7) == Rat(15, 336));
}

TEST_CASE("oracle: power of a first-order solution") {
    // f = (1-4x)^(-1/2) solves (1-4x) f' - 2 f = 0; g = f^(1/2) = (1-4x)^(-1/4)
    GFClass via_class = PowerOfFirstOrder{P("1-4*x"), Poly(-2), Rat(2)};
    TruncatedSeries a = oracle_expand(via_class, 25);
    TruncatedSeries b = oracle_expand(InverseRoot{P("1-4*x"), Rat(4)}, 25);
    for (int n = 0; n <= 25; ++n) CHECK(a.at(n) == b.at(n));
}

TEST_CASE("oracle rejects irrational constants") {
    CHECK_THROWS(oracle_expand(InverseRoot{P("2-4*x"), Rat(2)}, 5));
    CHECK_THROWS(oracle_expand(NestedSqrt{Poly(1), P("2+x"), Rat(2)}, 5));
    CHECK_THROWS(oracle_expand(LogRational{P("2"), P("1-x")}, 5));
}

TEST_CASE("oracle: exp-poly-sqrt branches") {
    // exp(x - 1 + sqrt(1-2x)): the + branch cancels the constant
    TruncatedSeries g = oracle_expand(ExpPolySqrt{P("x-1"), P("1-2*x"), +1}, 6);
    CHECK(g.at(0) == 1);
    // sqrt(1-2x) = 1 - x - x^2/2 - x^3/2 - ...; argument = -x^2/2 - x^3/2 - ...
    TruncatedSeries arg = series_add(series_from_poly(P("x-1"), 6),
                                     series_poly_power(P("1-2*x"), Rat(1, 2), 6));
    TruncatedSeries ref = series_exp(arg);
    for (int n = 0; n <= 6; ++n) CHECK(g.at(n) == ref.at(n));

    // the - branch needs w(0) - sqrt(p(0)) = 0
    CHECK_THROWS(oracle_expand(ExpPolySqrt{P("x-1"), P("1-2*x"), -1}, 4));
    TruncatedSeries h = oracle_expand(ExpPolySqrt{P("1+x"), P("1+2*x"), -1}, 6);
    CHECK(h.at(0) == 1);
}

TEST_CASE("oracle validates class parameters") {
    CHECK_THROWS_AS(oracle_expand(InverseRoot{P("x"), Rat(2)}, 4), UnsupportedShape);
    CHECK_THROWS_AS(oracle_expand(GeneralRoot{Poly(1), P("x"), P("1-4*x"), Rat(2)}, 4),
                    UnsupportedShape);
    CHECK_THROWS_AS(oracle_expand(Hypergeometric{{Rat(1)}, {Rat(-2)}, 0, 1, Rat(1)}, 4),
                    UnsupportedShape);
}
