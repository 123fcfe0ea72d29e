#include "holorec/expr.hpp"

#include <cctype>
#include <sstream>

namespace holorec {

ExprPtr Expr::number(const Rat& v) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Number;
    e->value = v;
    return e;
}

ExprPtr Expr::var() {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Var;
    return e;
}

ExprPtr Expr::unary(Kind k, ExprPtr a) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    return e;
}

ExprPtr Expr::binary(Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

ExprPtr Expr::pow(ExprPtr a, const Rat& exponent) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Pow;
    e->a = std::move(a);
    e->value = exponent;
    return e;
}

ExprPtr Expr::root(ExprPtr a, const Rat& r) {
    auto e = std::make_shared<Expr>();
    e->kind = Kind::Root;
    e->a = std::move(a);
    e->value = r;
    return e;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr run() {
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_char(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (peek_char(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    ExprPtr parse_expr() {
        skip_ws();
        ExprPtr left;
        if (accept('-')) {
            left = Expr::unary(Expr::Kind::Neg, parse_term());
        } else {
            left = parse_term();
        }
        for (;;) {
            if (accept('+')) {
                left = Expr::binary(Expr::Kind::Add, left, parse_term());
            } else if (accept('-')) {
                left = Expr::binary(Expr::Kind::Sub, left, parse_term());
            } else {
                return left;
            }
        }
    }

    ExprPtr parse_term() {
        ExprPtr left = parse_factor();
        for (;;) {
            if (accept('*')) {
                left = Expr::binary(Expr::Kind::Mul, left, parse_factor());
            } else if (accept('/')) {
                left = Expr::binary(Expr::Kind::Div, left, parse_factor());
            } else {
                return left;
            }
        }
    }

    ExprPtr parse_factor() {
        ExprPtr base = parse_atom();
        if (accept('^')) {
            Rat e = parse_exponent();
            return Expr::pow(base, e);
        }
        return base;
    }

    Rat parse_exponent() {
        skip_ws();
        if (accept('(')) {
            Rat e = parse_signed_rational();
            expect(')');
            return e;
        }
        return parse_signed_rational();
    }

    Rat parse_signed_rational() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Int num = parse_integer_digits();
        Int den(1);
        if (accept('/')) den = parse_integer_digits();
        if (den == 0) {
            pos_ = start;
            fail("zero denominator in rational exponent");
        }
        Rat q(neg ? -num : num, den);
        q.canonicalize();
        return q;
    }

    Int parse_integer_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected digits");
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    ExprPtr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = parse_integer_digits();
            return Expr::number(Rat(n));
        }
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "x") return Expr::var();
            if (name == "sqrt" || name == "exp" || name == "log") {
                expect('(');
                ExprPtr arg = parse_expr();
                expect(')');
                Expr::Kind k = name == "sqrt"  ? Expr::Kind::Sqrt
                               : name == "exp" ? Expr::Kind::Exp
                                               : Expr::Kind::Log;
                return Expr::unary(k, arg);
            }
            if (name == "root") {
                expect('(');
                ExprPtr arg = parse_expr();
                expect(',');
                Rat r = parse_signed_rational();
                expect(')');
                return Expr::root(arg, r);
            }
            pos_ = start;
            fail("unknown identifier '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Add:
        case Expr::Kind::Sub:
        case Expr::Kind::Neg: return 1;
        case Expr::Kind::Mul:
        case Expr::Kind::Div: return 2;
        case Expr::Kind::Pow: return 3;
        default: return 4; // atoms and calls
    }
}

void print_rec(const Expr& e, std::ostream& out, int parent_prec, bool right_side) {
    int prec = precedence(e.kind);
    bool parens = prec < parent_prec || (prec == parent_prec && right_side);
    switch (e.kind) {
        case Expr::Kind::Number: out << rat_str(e.value); return;
        case Expr::Kind::Var: out << "x"; return;
        case Expr::Kind::Neg:
            out << "(-";
            print_rec(*e.a, out, 2, true);
            out << ")";
            return;
        case Expr::Kind::Add:
        case Expr::Kind::Sub: {
            if (parens) out << "(";
            print_rec(*e.a, out, prec, false);
            out << (e.kind == Expr::Kind::Add ? "+" : "-");
            print_rec(*e.b, out, prec, true);
            if (parens) out << ")";
            return;
        }
        case Expr::Kind::Mul:
        case Expr::Kind::Div: {
            if (parens) out << "(";
            print_rec(*e.a, out, prec, false);
            out << (e.kind == Expr::Kind::Mul ? "*" : "/");
            print_rec(*e.b, out, prec, true);
            if (parens) out << ")";
            return;
        }
        case Expr::Kind::Pow: {
            if (parens) out << "(";
            print_rec(*e.a, out, 4, true); // power base binds tightest
            out << "^(" << rat_str(e.value) << ")";
            if (parens) out << ")";
            return;
        }
        case Expr::Kind::Sqrt:
        case Expr::Kind::Exp:
        case Expr::Kind::Log: {
            out << (e.kind == Expr::Kind::Sqrt ? "sqrt" : e.kind == Expr::Kind::Exp ? "exp" : "log");
            out << "(";
            print_rec(*e.a, out, 0, false);
            out << ")";
            return;
        }
        case Expr::Kind::Root: {
            out << "root(";
            print_rec(*e.a, out, 0, false);
            out << "," << rat_str(e.value) << ")";
            return;
        }
    }
}

} // namespace

ExprPtr parse_expression(std::string_view text) {
    Parser p(text);
    return p.run();
}

std::string print_expression(const Expr& e) {
    std::ostringstream out;
    print_rec(e, out, 0, false);
    return out.str();
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.value != b.value) return false;
    if (static_cast<bool>(a.a) != static_cast<bool>(b.a)) return false;
    if (static_cast<bool>(a.b) != static_cast<bool>(b.b)) return false;
    if (a.a && !expr_equal(*a.a, *b.a)) return false;
    if (a.b && !expr_equal(*a.b, *b.b)) return false;
    return true;
}

} // namespace holorec
