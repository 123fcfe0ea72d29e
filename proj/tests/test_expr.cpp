#include <doctest.h>

#include <functional>
#include <random>

#include "holorec/expr.hpp"

using namespace holorec;

TEST_CASE("grammar examples") {
    ExprPtr e = parse_expression("1/sqrt(1-4*x)");
    REQUIRE(e->kind == Expr::Kind::Div);
    CHECK(e->a->kind == Expr::Kind::Number);
    REQUIRE(e->b->kind == Expr::Kind::Sqrt);
    REQUIRE(e->b->a->kind == Expr::Kind::Sub);
    CHECK(e->b->a->b->kind == Expr::Kind::Mul);

    ExprPtr f = parse_expression("exp(x/(1-x))");
    REQUIRE(f->kind == Expr::Kind::Exp);
    REQUIRE(f->a->kind == Expr::Kind::Div);
    CHECK(f->a->a->kind == Expr::Kind::Var);

    ExprPtr g = parse_expression("(1-2*x-3*x^2)^(-1/2)");
    REQUIRE(g->kind == Expr::Kind::Pow);
    CHECK(g->value == Rat(-1, 2));
    CHECK(g->a->kind == Expr::Kind::Sub);

    ExprPtr h = parse_expression("root(1-x, 3)");
    REQUIRE(h->kind == Expr::Kind::Root);
    CHECK(h->value == 3);
}

TEST_CASE("whitespace is insignificant; implicit multiplication is not supported") {
    ExprPtr a = parse_expression(" 1 - 4 * x ");
    ExprPtr b = parse_expression("1-4*x");
    CHECK(expr_equal(*a, *b));
    CHECK_THROWS_AS(parse_expression("2x"), ParseError);
    CHECK_THROWS_AS(parse_expression("(1-x)(1+x)"), ParseError);
}

TEST_CASE("parse errors carry a byte offset") {
    try {
        parse_expression("1/sqrt(1-4*y)");
        FAIL("expected a parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.offset == 11);
    }
    try {
        parse_expression("1+");
        FAIL("expected a parse error");
    } catch (const ParseError& ex) {
        CHECK(ex.offset == 2);
    }
    CHECK_THROWS_AS(parse_expression("x^(1/0)"), ParseError);
    CHECK_THROWS_AS(parse_expression(""), ParseError);
}

TEST_CASE("print/parse round-trips structurally") {
    const char* samples[] = {
        "1/sqrt(1-4*x)",
        "exp(x/(1-x))",
        "(1-2*x-3*x^2)^(-1/2)",
        "root(1+9*x+9*x^3,-3)",
        "(1-2*x-3*x^2-(1-x)*sqrt(1-2*x-7*x^2))/(8*x^3)",
        "log((1)/(1-x))",
        "-x+(1+x)*sqrt(1-2*x-3*x^2)",
        "1-2*x-3*x^2/7+x^(3/2)",
        "sqrt((1+x)/(1-x))",
        "x*(1+x)/sqrt(1-2*x-3*x^2)",
    };
    for (const char* s : samples) {
        ExprPtr e = parse_expression(s);
        std::string printed = print_expression(*e);
        ExprPtr again = parse_expression(printed);
        CAPTURE(s);
        CAPTURE(printed);
        CHECK(expr_equal(*e, *again));
    }
}

TEST_CASE("random expression round-trip") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> pick(0, 9), num(1, 9);
    std::function<ExprPtr(int)> build = [&](int depth) -> ExprPtr {
        if (depth <= 0) {
            return pick(rng) < 5 ? Expr::var() : Expr::number(Rat(num(rng)));
        }
        switch (pick(rng)) {
            case 0: return Expr::binary(Expr::Kind::Add, build(depth - 1), build(depth - 1));
            case 1: return Expr::binary(Expr::Kind::Sub, build(depth - 1), build(depth - 1));
            case 2: return Expr::binary(Expr::Kind::Mul, build(depth - 1), build(depth - 1));
            case 3: return Expr::binary(Expr::Kind::Div, build(depth - 1), build(depth - 1));
            case 4: {
                Rat e(num(rng) - 5, num(rng));
                e.canonicalize();
                return Expr::pow(build(depth - 1), e);
            }
            case 5: return Expr::unary(Expr::Kind::Sqrt, build(depth - 1));
            case 6: return Expr::unary(Expr::Kind::Exp, build(depth - 1));
            case 7: return Expr::unary(Expr::Kind::Log, build(depth - 1));
            case 8: return Expr::unary(Expr::Kind::Neg, build(depth - 1));
            default: return Expr::root(build(depth - 1), Rat(num(rng)));
        }
    };
    for (int i = 0; i < 200; ++i) {
        ExprPtr e = build(4);
        ExprPtr again = parse_expression(print_expression(*e));
        CHECK(expr_equal(*e, *again));
    }
}
