#ifndef HOLOREC_CLASSIFY_HPP
#define HOLOREC_CLASSIFY_HPP

#include "holorec/expr.hpp"
#include "holorec/gfclass.hpp"

namespace holorec {

// Matches an expression against the supported generating-function shapes.
// The expression is evaluated symbolically in the field of rational
// functions extended by at most one radical and one exponential factor;
// the resulting normal form picks the most specific class. Throws
// UnsupportedShape when no shape fits or a precondition fails.
GFClass classify(const Expr& expr);
GFClass classify(const std::string& text);

// Extracts a polynomial from an expression (used for CLI --p/--q/... flags).
Poly parse_poly(const std::string& text);

} // namespace holorec

#endif
