#ifndef HOLOREC_EXPR_HPP
#define HOLOREC_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

#include "holorec/exact.hpp"

namespace holorec {

// Generating-function expression AST.
//
// Grammar (whitespace insignificant, no implicit multiplication):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' exponent)?
//   atom   := integer | 'x' | '(' expr ')'
//           | ('sqrt'|'exp'|'log') '(' expr ')'
//           | 'root' '(' expr ',' rational ')'
//   exponent := signed-rational | '(' signed-rational ')'
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { Number, Var, Neg, Add, Sub, Mul, Div, Pow, Sqrt, Root, Exp, Log };

    Kind kind{};
    Rat value;   // Number literal; for Pow the exponent, for Root the root index r
    ExprPtr a;   // operand / left operand
    ExprPtr b;   // right operand

    static ExprPtr number(const Rat& v);
    static ExprPtr var();
    static ExprPtr unary(Kind k, ExprPtr a);
    static ExprPtr binary(Kind k, ExprPtr a, ExprPtr b);
    static ExprPtr pow(ExprPtr a, const Rat& e);
    static ExprPtr root(ExprPtr a, const Rat& r);
};

ExprPtr parse_expression(std::string_view text);
std::string print_expression(const Expr& e);
bool expr_equal(const Expr& a, const Expr& b);

} // namespace holorec

#endif
